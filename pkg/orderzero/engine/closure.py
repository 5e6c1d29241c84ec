"""
Closure of a set of transformations under composition, generating-set
and subsemigroup tests, undecomposable elements.
"""
import logging
from collections import deque
from typing import Dict, NamedTuple, Optional, Tuple

from orderzero.engine.table import MultiplicationTable
from orderzero.store import ElementStore
from orderzero.transformations import DegreeMismatch, Transformation, compose, kernel, product

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 10000


class ClosureResult(NamedTuple):
    elements: ElementStore
    generators: Tuple[Transformation, ...]
    generator_count: int
    product_count: int
    word_witness: Optional[Dict[Transformation, Tuple[int, ...]]]

    def word_product(self, t):
        """ Multiply out the recorded generator word of ``t`` """
        word = self.word_witness[t]
        return product(*(self.generators[i] for i in word))


class _Budget:
    """ Counts compositions; raises once ``limit`` is passed. """

    def __init__(self, limit=None):
        self.limit = limit
        self.used = 0

    def spend(self, count=1):
        self.used += count
        if self.limit is not None and self.used > self.limit:
            raise ProductBudgetExhausted(self.used)


class ProductBudgetExhausted(Exception):
    pass


def _generator_tuple(generators):
    gens = []
    seen = set()
    for g in generators:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    if not gens:
        raise ValueError("Closure needs at least one generator")
    n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise DegreeMismatch(f"Generators of different degrees: {gens[0]} and {g}")
    return tuple(gens)


def closure(generators, record_words=True, _budget=None):
    """
    Smallest set containing ``generators`` that is closed under
    composition, built breadth-first by right multiplication with the
    generators.

        >>> from orderzero.transformations import Transformation as T
        >>> res = closure([T((1, 1, 2)), T((1, 1, 3))])
        >>> [str(t) for t in res.elements]
        ['[1,1,2]', '[1,1,3]', '[1,1,1]']
    """
    gens = _generator_tuple(generators)
    budget = _budget if _budget is not None else _Budget()
    n = gens[0].degree
    store = ElementStore(n)
    words = {} if record_words else None
    queue = deque()
    for i, g in enumerate(gens):
        store.add(g)
        if record_words:
            words[g] = (i,)
        queue.append(g)

    products = 0
    while queue:
        t = queue.popleft()
        for i, g in enumerate(gens):
            budget.spend()
            products += 1
            p = compose(t, g)
            if store.add(p):
                if record_words:
                    words[p] = words[t] + (i,)
                queue.append(p)
                if len(store) % PROGRESS_EVERY == 0:
                    logger.debug("closure: %d elements", len(store))

    logger.debug("closure of %d generators: %d elements, %d products",
                 len(gens), len(store), products)
    return ClosureResult(store, gens, len(gens), products, words)


def extend_closure(closed, base_generators, new_generators, _budget=None):
    """
    Closure of ``base_generators + new_generators`` given the already
    closed set ``closed`` generated by ``base_generators``.

    Returns a python set of elements. Words not recorded.
    """
    budget = _budget if _budget is not None else _Budget()
    known = set(closed)
    gens = list(base_generators) + [g for g in new_generators]
    queue = deque()
    for p in new_generators:
        if p not in known:
            known.add(p)
            queue.append(p)
    # words u*p with u from the closed part and p new
    for u in closed:
        for p in new_generators:
            budget.spend()
            q = compose(u, p)
            if q not in known:
                known.add(q)
                queue.append(q)
    while queue:
        t = queue.popleft()
        for g in gens:
            budget.spend()
            q = compose(t, g)
            if q not in known:
                known.add(q)
                queue.append(q)
    return known


def is_generating_set(generators, target):
    """ True if the closure of ``generators`` is exactly ``target`` """
    gens = list(generators)
    target_set = set(target)
    if not gens:
        return not target_set
    if not set(gens) <= target_set:
        return False
    return set(closure(gens, record_words=False).elements) == target_set


def is_subsemigroup(store):
    """ True if ``store`` is closed under composition """
    return find_closure_violation(store) is None


def find_closure_violation(store):
    """ First pair ``(a, b)`` of ``store`` with ``ab`` outside it, or None """
    if len(store) == 0:
        return None
    table = MultiplicationTable(store)
    violation = table.first_violation()
    if violation is None:
        return None
    i, j = violation
    return store[i], store[j]


def undecomposables(store):
    """
    Elements ``s`` of a closed ``store`` with no factorization ``s = ab``,
    ``a, b`` in ``store`` different from ``s``.

        >>> from orderzero.transformations import Transformation as T
        >>> r1 = ElementStore(3, [T((1, 1, 1)), T((1, 1, 2)), T((1, 1, 3))])
        >>> [str(t) for t in undecomposables(r1)]
        ['[1,1,2]', '[1,1,3]']
    """
    if len(store) == 0:
        return ElementStore(store.degree)
    table = MultiplicationTable(store)
    mask = table.decomposable_mask()
    return ElementStore(store.degree, (t for t, dec in zip(store, mask) if not dec))


def kernel_refines_product(b, c):
    """ ker(b) is contained in ker(bc) """
    return kernel(b).refines(kernel(compose(b, c)))
