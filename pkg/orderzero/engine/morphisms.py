"""
Checking that a correspondence between two finite semigroups is an
isomorphism.
"""
import logging
from collections.abc import Mapping
from typing import NamedTuple, Optional, Tuple

import numpy as np

from orderzero.engine.table import MultiplicationTable
from orderzero.transformations import Transformation

logger = logging.getLogger(__name__)


class MorphismReport(NamedTuple):
    ok: bool
    counterexample: Optional[Tuple[Transformation, ...]] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


def _failure(reason, counterexample=None):
    logger.debug("not an isomorphism: %s", reason)
    return MorphismReport(False, counterexample, reason)


def verify_isomorphism(mapping, source, target):
    """
    Check that ``mapping`` (a callable or a mapping) is a bijection of
    the closed set ``source`` onto ``target`` with
    ``mapping(ab) = mapping(a) mapping(b)``.

        >>> from orderzero.store import ElementStore
        >>> from orderzero.transformations import dual
        >>> r1 = ElementStore(3, [Transformation(w) for w in [(1, 1, 1), (1, 1, 2), (1, 1, 3)]])
        >>> r3 = ElementStore(3, [Transformation(w) for w in [(3, 3, 3), (2, 3, 3), (1, 3, 3)]])
        >>> bool(verify_isomorphism(dual, r1, r3))
        True

    On failure the report carries the offending element or pair.
    """
    func = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    if len(source) != len(target):
        return _failure(f"sizes differ: {len(source)} and {len(target)}")

    indices = np.empty(len(source), dtype=np.int64)
    seen = {}
    for i, s in enumerate(source):
        try:
            t = func(s)
        except (KeyError, ValueError) as e:
            return _failure(f"map is undefined at {s}: {e}", (s,))
        if t not in target:
            return _failure(f"{s} is mapped to {t}, outside the target", (s,))
        if t in seen:
            return _failure(f"{seen[t]} and {s} are both mapped to {t}", (seen[t], s))
        seen[t] = s
        indices[i] = target.index(t)

    source_products = MultiplicationTable(source).product_indices()
    if (source_products < 0).any():
        i, j = np.argwhere(source_products < 0)[0]
        return _failure("the source is not closed", (source[i], source[j]))
    target_products = MultiplicationTable(target).product_indices()

    # f(ab) against f(a) f(b)
    lhs = indices[source_products]
    rhs = target_products[np.ix_(indices, indices)]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j = bad[0]
        a, b = source[int(i)], source[int(j)]
        return _failure(f"the map does not preserve the product of {a} and {b}", (a, b))
    return MorphismReport(True)
