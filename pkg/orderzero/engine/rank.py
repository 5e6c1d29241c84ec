"""
Exact rank (least size of a generating set) of a finite semigroup of
order-preserving transformations.

Products never increase the image size, so for every generating set A
of S and every r the rank-r-or-more part of A generates the same
elements as the rank-r-or-more part of S. The search therefore runs
layer by layer, from the largest image size down: for each layer it
finds the least number of the layer's elements that, added to what the
upper layers already generate, cover the layer. The rank is the sum of
these minima and the union of the layer choices is a witness.

Within a layer the search takes the undecomposable elements first and
then tries 1, 2, ... extra picks in lexicographic combination order, so
the returned witness is the lexicographically least one of least size.
"""
import itertools
import logging
from collections import deque
from typing import NamedTuple, Optional, Tuple

import numpy as np

from orderzero.config import SearchBudget
from orderzero.engine.table import MultiplicationTable
from orderzero.transformations import Transformation, kernel

logger = logging.getLogger(__name__)


class RankCertificate(NamedTuple):
    rank: int
    witness: Tuple[Transformation, ...]
    mandatory: Tuple[Transformation, ...]
    search_exhaustive: bool
    lower_bound: int
    upper_bound: int
    product_count: int = 0
    reason: Optional[str] = None

    @property
    def mode(self):
        return 'exact' if self.search_exhaustive else 'bounds'


class _Exhausted(Exception):
    def __init__(self, reason, proven_depth=0):
        super().__init__(reason)
        self.reason = reason
        self.proven_depth = proven_depth


def _image_size(t):
    return len(set(t.images))


def candidate_key(t):
    """ Sort key of the search: larger images first, then image word """
    return -_image_size(t), t.images


def rank_lower_bound_images(store):
    """
    Structural lower bound from the top layer: every image and every
    kernel occurring there must be the image (kernel) of a generator.
    """
    if len(store) == 0:
        raise ValueError("Rank of an empty set is undefined")
    top = max(_image_size(t) for t in store)
    layer = [t for t in store if _image_size(t) == top]
    images = {frozenset(t.images) for t in layer}
    kernels = {kernel(t) for t in layer}
    return max(len(images), len(kernels))


class _IndexedSearch:
    """ Closure arithmetic on store indices through a product table. """

    def __init__(self, store, budget, table=None):
        self.store = store
        self.table = table if table is not None else MultiplicationTable(store)
        self.ranks = np.array([_image_size(t) for t in store], dtype=np.int64)
        self.max_products = budget.max_products if budget is not None else None
        self.max_depth = budget.max_depth if budget is not None else None
        self.products = 0
        # lexicographic position of every index
        order = sorted(range(len(store)), key=lambda i: store[i].images)
        self.lex_position = np.empty(len(store), dtype=np.int64)
        self.lex_position[order] = np.arange(len(store))

    def _spend(self, count):
        self.products += count
        if self.max_products is not None and self.products > self.max_products:
            raise _Exhausted(f"product budget {self.max_products} exhausted")

    def extend(self, known, gens, new, min_rank=0):
        """
        Closure of ``gens + new`` restricted to image size ``>= min_rank``,
        given ``known``, the same closure of ``gens`` (boolean mask).
        """
        known = known.copy()
        queue = deque()

        def push(indices):
            if (indices < 0).any():
                raise ValueError("The set is not closed under composition")
            indices = indices[self.ranks[indices] >= min_rank]
            indices = np.unique(indices[~known[indices]])
            known[indices] = True
            queue.extend(indices.tolist())

        old = np.flatnonzero(known)
        for p in new:
            push(np.array([p], dtype=np.int64))
            if len(old):
                self._spend(len(old))
                push(self.table.right_multiples(old, p))
        all_gens = np.array(list(gens) + list(new), dtype=np.int64)
        while queue:
            t = queue.popleft()
            self._spend(len(all_gens))
            push(self.table.left_products(t, all_gens))
        return known

    def closure_mask(self, gens, min_rank=0):
        return self.extend(np.zeros(len(self.store), dtype=bool), [], gens, min_rank)

    def lex_sorted(self, indices):
        return sorted(indices, key=lambda i: self.lex_position[i])

    def search_layer(self, known, gens, candidates, layer_idx, r):
        """ Least lexicographic set of extra picks covering the layer """
        for depth in itertools.count(1):
            if self.max_depth is not None and depth > self.max_depth:
                raise _Exhausted(f"depth limit {self.max_depth} reached", depth)
            logger.debug("rank search: layer %d, trying %d extra picks", r, depth)
            try:
                found = self._dfs(known, gens, candidates, 0, depth, [], layer_idx, r)
            except _Exhausted as e:
                e.proven_depth = depth
                raise
            if found is not None:
                return found

    def _dfs(self, known, gens, candidates, start, remaining, chosen, layer_idx, r):
        if remaining == 0:
            return chosen if known[layer_idx].all() else None
        for pos in range(start, len(candidates) - remaining + 1):
            c = candidates[pos]
            # a pick already generated by the others makes the combination non-minimal
            if known[c]:
                continue
            ext = self.extend(known, list(gens) + chosen, [c], r)
            found = self._dfs(ext, gens, candidates, pos + 1, remaining - 1,
                              chosen + [c], layer_idx, r)
            if found is not None:
                return found
        return None

    def greedy(self, mandatory_mask):
        """ Layered greedy generating set: mandatory, then least uncovered """
        gens = []
        for r in sorted(set(self.ranks.tolist()), reverse=True):
            layer_idx = np.flatnonzero(self.ranks == r)
            gens += self.lex_sorted(i for i in layer_idx if mandatory_mask[i])
            known = self.closure_mask(gens, r)
            while not known[layer_idx].all():
                pick = self.lex_sorted(i for i in layer_idx if not known[i])[0]
                known = self.extend(known, gens, [pick], r)
                gens.append(pick)
        return gens


def _as_elements(store, indices):
    return tuple(sorted((store[i] for i in indices), key=candidate_key))


def _known_indices(store, known_generators):
    if known_generators is None:
        return None
    indices = []
    for g in known_generators:
        if g not in store:
            logger.warning("Known generator %s is not in the set; ignoring the set", g)
            return None
        indices.append(store.index(g))
    return sorted(set(indices))


def _upper_bound(search, mandatory_mask, known_generators):
    known_idx = _known_indices(search.store, known_generators)
    if known_idx:
        if search.closure_mask(known_idx).all():
            return known_idx
        logger.warning("Known generators do not generate the set; using a greedy set")
    return search.greedy(mandatory_mask)


def _mandatory_mask(table):
    return ~table.decomposable_mask()


def rank_bounds(store, known_generators=None, _table=None, _mandatory=None, lower=0,
                reason=None, products=0):
    """
    Bounds-only certificate: lower bound from mandatory elements and the
    top-layer structure, upper bound from ``known_generators`` (when they
    generate the set) or a layered greedy generating set.
    """
    if len(store) == 0:
        raise ValueError("Rank of an empty set is undefined")
    table = _table if _table is not None else MultiplicationTable(store)
    mandatory_mask = _mandatory if _mandatory is not None else _mandatory_mask(table)
    search = _IndexedSearch(store, None, table)

    top = int(search.ranks.max())
    top_mand = int((mandatory_mask & (search.ranks == top)).sum())
    structural = (int(mandatory_mask.sum()) - top_mand
                  + max(top_mand, rank_lower_bound_images(store)))
    upper_idx = _upper_bound(search, mandatory_mask, known_generators)
    lower_bound = max(structural, lower)
    upper_bound = len(upper_idx)
    logger.info("rank bounds for %d elements: %d <= rank <= %d", len(store), lower_bound, upper_bound)
    return RankCertificate(
        rank=upper_bound,
        witness=_as_elements(store, upper_idx),
        mandatory=_as_elements(store, np.flatnonzero(mandatory_mask)),
        search_exhaustive=False,
        lower_bound=lower_bound,
        upper_bound=upper_bound,
        product_count=products,
        reason=reason,
    )


def rank_exact(store, budget=None, known_generators=None):
    """
    Compute the rank of the closed set ``store``.

        >>> from orderzero.store import ElementStore
        >>> r1 = ElementStore(3, [Transformation(w) for w in [(1, 1, 1), (1, 1, 2), (1, 1, 3)]])
        >>> cert = rank_exact(r1)
        >>> cert.rank, [str(t) for t in cert.witness], cert.mode
        (2, ['[1,1,2]', '[1,1,3]'], 'exact')

    When the set is larger than ``budget.max_elements`` or the search
    runs out of products or depth, a bounds-only certificate is returned
    (``search_exhaustive`` is False).
    """
    if len(store) == 0:
        raise ValueError("Rank of an empty set is undefined")
    budget = budget if budget is not None else SearchBudget.default()
    table = MultiplicationTable(store)
    mandatory_mask = _mandatory_mask(table)

    if len(store) > budget.max_elements:
        reason = f"{len(store)} elements exceed the search limit {budget.max_elements}"
        logger.info("rank search skipped: %s", reason)
        return rank_bounds(store, known_generators, table, mandatory_mask, reason=reason)

    search = _IndexedSearch(store, budget, table)
    layers = sorted(set(search.ranks.tolist()), reverse=True)
    gens = []
    for pos, r in enumerate(layers):
        layer_idx = np.flatnonzero(search.ranks == r)
        mand_r = search.lex_sorted(i for i in layer_idx if mandatory_mask[i])
        gens += mand_r
        try:
            known = search.closure_mask(gens, r)
            uncovered = [i for i in layer_idx if not known[i]]
            if uncovered:
                picks = search.search_layer(known, gens, search.lex_sorted(uncovered), layer_idx, r)
                gens += picks
        except _Exhausted as e:
            below = int((mandatory_mask & (search.ranks < r)).sum())
            lower = len(gens) + e.proven_depth + below
            logger.info("rank search stopped at layer %d: %s", r, e.reason)
            return rank_bounds(store, known_generators, table, mandatory_mask,
                               lower=lower, reason=e.reason, products=search.products)

    rank = len(gens)
    logger.debug("rank search done: rank %d, %d products", rank, search.products)
    return RankCertificate(
        rank=rank,
        witness=_as_elements(store, gens),
        mandatory=_as_elements(store, np.flatnonzero(mandatory_mask)),
        search_exhaustive=True,
        lower_bound=rank,
        upper_bound=rank,
        product_count=search.products,
    )


def greedy_generating_set(store, known_generators=None):
    """ A generating set of the closed ``store`` chosen greedily layer by layer """
    return rank_bounds(store, known_generators).witness
