import inspect
import logging
from typing import TYPE_CHECKING, Union

from orderzero import config
from orderzero.engine import closure, rank_bounds, rank_exact, undecomposables
from orderzero.store import to_jsonable
from orderzero.utils import params_repr

if TYPE_CHECKING:
    from orderzero.verifier import Verifier

logger = logging.getLogger(__name__)


class Evidence:
    """
    Collector of the values a claim computed and of the sub-assertions
    that did not hold. Every failure keeps a counterexample.
    """

    def __init__(self):
        self.data = {}
        self.failures = []
        self.checks = 0

    @property
    def ok(self):
        return not self.failures

    def record(self, key, value):
        self.data[key] = to_jsonable(value)

    def fail(self, check, counterexample, detail=None):
        failure = {'check': check, 'counterexample': to_jsonable(counterexample)}
        if detail is not None:
            failure['detail'] = detail
        logger.debug("check failed: %s (%r)", check, counterexample)
        self.failures.append(failure)
        return False

    def expect(self, condition, check, counterexample=None, detail=None):
        self.checks += 1
        if condition:
            return True
        return self.fail(check, counterexample, detail)

    def expect_equal(self, check, actual, expected):
        return self.expect(actual == expected, check,
                           {'actual': actual, 'expected': expected})

    def expect_equal_sets(self, check, actual, expected):
        """ Compare two collections as sets; a failure names one differing element """
        actual, expected = set(actual), set(expected)
        self.checks += 1
        if actual == expected:
            return True
        extra = sorted(actual - expected)
        missing = sorted(expected - actual)
        if extra:
            return self.fail(check, extra[0], f"{len(extra)} unexpected element(s)")
        return self.fail(check, missing[0], f"{len(missing)} missing element(s)")

    def to_json(self):
        return {'values': self.data, 'failures': self.failures, 'checks': self.checks}


class BaseClaim:
    """
    Base class for claim checkers.

    Subclasses set ``claim_id`` and ``min_degree`` and implement ``check``;
    claims with stated values below ``min_degree`` list those degrees in
    ``small_degrees`` and implement ``check_small``.

    Constructor parameters must be saved as instance attributes of the
    same name so that units can be cloned and bound to a verifier.
    """
    claim_id = None
    min_degree = 2
    small_degrees = ()
    verifier: Union["Verifier", None] = None
    budget = None
    _repr_hidden_params = ('generators',)

    def init(self, verifier):
        self.verifier = verifier
        self.budget = verifier.budget

    def clone(self):
        return type(self)(**self.params())

    def skip_reason(self, n, params):
        """ Why the claim doesn't apply at degree ``n``, or None """
        if n >= self.min_degree:
            return None
        if n in self.small_degrees and params.get('small_n'):
            return None
        return f"n >= {self.min_degree} required"

    def run(self, n, params, evidence):
        if n < self.min_degree:
            self.check_small(n, params, evidence)
        else:
            self.check(n, params, evidence)

    def check(self, n, params, evidence):
        raise NotImplementedError()

    def check_small(self, n, params, evidence):
        raise NotImplementedError()

    def __repr__(self):
        params = params_repr(self.params(), hidden=self._repr_hidden_params)
        return f"{type(self).__name__}({params})"

    @classmethod
    def param_names(cls):
        if cls.__init__ is object.__init__:
            return ()
        names = inspect.signature(cls.__init__).parameters
        return tuple(sorted(name for name in names if name != 'self'))

    def params(self):
        """ Constructor arguments of this unit, read back from attributes """
        return {name: getattr(self, name, None) for name in self.param_names()}


class GeneratingSetClaim(BaseClaim):
    """
    A claim about a generating set. ``generators`` (a callable taking
    the degree) replaces the stated set, e.g. to feed a mutated family.
    """

    def __init__(self, generators=None):
        self.generators = generators

    def default_generators(self, n):
        raise NotImplementedError()

    def generating_set(self, n):
        if self.generators is not None:
            return list(self.generators(n))
        return list(self.default_generators(n))


# ============================ shared checks ============================

def check_generates(evidence, name, generators, target):
    """ The closure of ``generators`` is exactly the store ``target`` """
    generators = list(generators)
    for g in generators:
        if g not in target:
            return evidence.fail(f"{name} lies in the target set", g)
    elements = closure(generators, record_words=False).elements
    return evidence.expect_equal_sets(f"<{name}> is the target set", elements, target)


def check_minimal(evidence, name, generators, target):
    """ No proper subset of ``generators`` obtained by dropping one element generates ``target`` """
    generators = list(generators)
    target_set = target.as_set()
    for g in generators:
        rest = [h for h in generators if h != g]
        if not rest:
            continue
        elements = closure(rest, record_words=False).elements
        evidence.expect(elements.as_set() != target_set,
                        f"{name} without one element no longer generates", g)


def check_undecomposable(evidence, name, elements, store):
    mandatory = undecomposables(store).as_set()
    for t in elements:
        evidence.expect(t in mandatory, f"every element of {name} is undecomposable", t)
    return mandatory


def check_rank(evidence, name, store, expected, generators=None, budget=None):
    """
    Compare the rank of ``store`` with ``expected``. Small sets get the
    exact search; larger ones are checked against bounds, the upper bound
    coming from ``generators`` when given.
    """
    if len(store) <= config.CLAIM_EXACT_RANK_LIMIT:
        cert = rank_exact(store, budget, known_generators=generators)
    else:
        cert = rank_bounds(store, known_generators=generators,
                           reason=f"{len(store)} elements exceed the claim search limit")
    evidence.record(f"rank({name})", {
        'mode': cert.mode,
        'rank': cert.rank,
        'lower_bound': cert.lower_bound,
        'upper_bound': cert.upper_bound,
        'witness': cert.witness,
    })
    witness = set(cert.witness)
    missing = [t for t in cert.mandatory if t not in witness]
    evidence.expect(not missing, f"undecomposables of {name} are in the witness",
                    missing[0] if missing else None)
    if cert.search_exhaustive:
        evidence.expect_equal(f"rank({name})", cert.rank, expected)
    else:
        evidence.expect(cert.lower_bound <= expected <= cert.upper_bound,
                        f"rank({name}) lies within the bounds",
                        {'lower_bound': cert.lower_bound, 'upper_bound': cert.upper_bound,
                         'expected': expected})
        if generators is not None:
            evidence.expect_equal(f"upper bound for rank({name})", cert.upper_bound, expected)
    return cert
