"""
Constants and configuration for orderzero.

Caps can be overridden with environment variables; explicit arguments
passed to library functions always win over both.
"""
import os
from typing import NamedTuple

# largest degree for which a set is materialized element by element
# (|O_12| = C(23, 11) = 1352078)
ENUMERATION_CAP = 12
ENUMERATION_CAP_ENV_VARIABLE = 'ORDERZERO_ENUMERATION_CAP'

# largest degree for the existential (witness search) membership oracles
DEFINITIONAL_CAP = 6
DEFINITIONAL_CAP_ENV_VARIABLE = 'ORDERZERO_DEFINITIONAL_CAP'

# rank search limits
MAX_ELEMENTS = 2000
MAX_ELEMENTS_ENV_VARIABLE = 'ORDERZERO_MAX_ELEMENTS'
MAX_DEPTH = 8
MAX_PRODUCTS = 10**8

# claim checkers run the exact rank search only on sets this small;
# larger sets are checked through generating sets and bounds
CLAIM_EXACT_RANK_LIMIT = 100

# THEOREM_5 checks every admissible Y up to this degree
ALL_SUBSETS_MAX_DEGREE = 5

# version of the JSON documents written by the CLI and by store.save_store
SCHEMA_VERSION = 1

# claim checkers, in the order the statements appear
DEFAULT_CLAIMS = [
    'LEMMA_1',
    'LEMMA_2',
    'LEMMA_3',
    'SUBSEMIGROUP_IFF',
    'THEOREM_4',
    'THEOREM_5',
    'COROLLARY_6',
    'LEMMA_7',
    'THEOREM_8',
    'PROP_9',
    'LEMMA_10',
    'THEOREM_11',
    'COROLLARY_12',
    'LEMMA_13',
    'THEOREM_14',
    'FINAL_REMARK',
]


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value == '':
        return default
    try:
        result = int(value)
    except ValueError:
        raise ValueError(f"{name} must be a positive integer, got {repr(value)}") from None
    if result < 1:
        raise ValueError(f"{name} must be a positive integer, got {repr(value)}")
    return result


def enumeration_cap(cap=None):
    """ Return the enumeration cap: ``cap`` if given, else env, else default """
    if cap is not None:
        return cap
    return _env_int(ENUMERATION_CAP_ENV_VARIABLE, ENUMERATION_CAP)


def definitional_cap(cap=None):
    if cap is not None:
        return cap
    return _env_int(DEFINITIONAL_CAP_ENV_VARIABLE, DEFINITIONAL_CAP)


class LimitExceeded(ValueError):
    """ A configured enumeration or search cap is exceeded. """


class SearchBudget(NamedTuple):
    """
    Limits for the exact rank search.

    >>> SearchBudget.parse("max_elements=50,max_depth=3")
    SearchBudget(max_elements=50, max_depth=3, max_products=100000000)
    >>> SearchBudget.parse("300").max_elements
    300
    """
    max_elements: int = MAX_ELEMENTS
    max_depth: int = MAX_DEPTH
    max_products: int = MAX_PRODUCTS

    @classmethod
    def default(cls):
        return cls(max_elements=_env_int(MAX_ELEMENTS_ENV_VARIABLE, MAX_ELEMENTS))

    @classmethod
    def parse(cls, text, base=None):
        """
        Parse ``"max_elements=N,max_depth=N,max_products=N"`` (any subset,
        any order) or a bare integer meaning ``max_elements``.
        """
        budget = base if base is not None else cls.default()
        text = text.strip()
        if text.isdigit():
            return budget._replace(max_elements=int(text))
        changes = {}
        for part in text.split(','):
            key, sep, value = part.partition('=')
            key = key.strip()
            if not sep or key not in cls._fields:
                raise ValueError(
                    f"Invalid budget item {repr(part)}; expected one of {', '.join(cls._fields)}"
                )
            try:
                changes[key] = int(value)
            except ValueError:
                raise ValueError(f"Budget value for {key} must be an integer, got {repr(value)}") from None
            if changes[key] < 0:
                raise ValueError(f"Budget value for {key} must be non-negative")
        return budget._replace(**changes)
