"""
:mod:`orderzero.enumeration` enumerates O_n and its distinguished
subsets and implements membership in the zero-divisor sets L_k, R_k
and Z_k of the constant map pi_k.

Elements are generated as nondecreasing image words, so every store
produced here is in lexicographic order.
"""
import itertools
import logging
from typing import NamedTuple, Optional, Tuple

from orderzero import config
from orderzero.config import LimitExceeded
from orderzero.store import ElementStore, read_store
from orderzero.transformations import (
    Transformation,
    compose,
    constant,
    identity,
    image,
    is_order_preserving,
    preimage,
)
from orderzero.utils import is_int

logger = logging.getLogger(__name__)

KINDS = ('O', 'IO', 'O_Y', 'L', 'R', 'Z', 'R1_STAR', 'Z1_STAR')


class SemigroupId(NamedTuple):
    kind: str
    n: int
    k: Optional[int] = None
    y: Optional[Tuple[int, ...]] = None

    def __str__(self):
        if self.kind in ('L', 'R', 'Z'):
            return f"{self.kind}_{self.k} (n={self.n})"
        if self.kind == 'O_Y':
            return f"O_{self.n}({{{','.join(map(str, self.y))}}})"
        return f"{self.kind} (n={self.n})"


def semigroup_id(kind, n, k=None, y=None):
    """
    Build a validated :class:`SemigroupId`:

        >>> semigroup_id('R', 3, k=2)
        SemigroupId(kind='R', n=3, k=2, y=None)
        >>> semigroup_id('O_Y', 3, y=[2, 1])
        SemigroupId(kind='O_Y', n=3, k=None, y=(1, 2))
        >>> semigroup_id('L', 3, k=4)
        Traceback (most recent call last):
        ...
        ValueError: L needs 1 <= k <= 3, got k=4
    """
    if kind not in KINDS:
        raise ValueError(f"Unknown set kind {repr(kind)}. Known kinds: {', '.join(KINDS)}")
    if not is_int(n) or n < 1:
        raise ValueError(f"Degree must be a positive integer, got {repr(n)}")
    if kind in ('L', 'R', 'Z'):
        if not is_int(k) or not 1 <= k <= n:
            raise ValueError(f"{kind} needs 1 <= k <= {n}, got k={k}")
    elif k is not None:
        raise ValueError(f"{kind} takes no k parameter")
    if kind == 'O_Y':
        if not y:
            raise ValueError("O_Y needs a nonempty point set Y")
        y = tuple(sorted(set(y)))
        if y[0] < 1 or y[-1] > n:
            raise ValueError(f"Y={list(y)} is not a subset of 1..{n}")
    elif y is not None:
        raise ValueError(f"{kind} takes no Y parameter")
    if kind in ('R1_STAR', 'Z1_STAR') and n < 3:
        raise ValueError(f"{kind} is defined for n >= 3, got n={n}")
    return SemigroupId(kind, n, k, y)


# ============================ membership ============================

def _check_args(a, k):
    n = a.degree
    if not is_int(k) or not 1 <= k <= n:
        raise ValueError(f"k={repr(k)} is out of range 1..{n}")
    if not is_order_preserving(a):
        raise ValueError(f"{a} is not order-preserving")


def in_L(a, k):
    """
    Left zero-divisor test by the structure of L_k:
    ``n`` not in Im for k=1, ``1`` not in Im for k=n, either of them
    missing for 1 < k < n.

        >>> in_L(Transformation((1, 1, 2)), 1)
        True
    """
    _check_args(a, k)
    n = a.degree
    im = a.images
    has_one, has_n = im[0] == 1, im[-1] == n
    if k == 1:
        return not has_n
    if k == n:
        return not has_one
    return not (has_one and has_n)


def in_R(a, k):
    """
    Right zero-divisor test: ``k`` in Im and ``k a^{-1} != {k}``.

        >>> in_R(Transformation((1, 2, 3)), 2)
        False
    """
    _check_args(a, k)
    return any(value == k and x != k for x, value in enumerate(a.images, 1))


def in_Z(a, k):
    """
        >>> in_Z(Transformation((1, 1, 2)), 1), in_Z(Transformation((1, 1, 3)), 1)
        (True, False)
    """
    return in_L(a, k) and in_R(a, k)


def _check_definitional(a, k, cap):
    _check_args(a, k)
    cap = config.definitional_cap(cap)
    if a.degree > cap:
        raise LimitExceeded(
            f"Definitional membership is capped at n={cap}, got n={a.degree}"
        )


def in_L_definitional(a, k, cap=None):
    """ Exists b in O_n, b != pi_k, with ab = pi_k (exhaustive search) """
    _check_definitional(a, k, cap)
    pi_k = constant(a.degree, k)
    return any(b != pi_k and compose(a, b) == pi_k for b in iter_order_preserving(a.degree))


def in_R_definitional(a, k, cap=None):
    """ Exists c in O_n, c != pi_k, with ca = pi_k (exhaustive search) """
    _check_definitional(a, k, cap)
    pi_k = constant(a.degree, k)
    return any(c != pi_k and compose(c, a) == pi_k for c in iter_order_preserving(a.degree))


def in_Z_definitional(a, k, cap=None):
    return in_L_definitional(a, k, cap) and in_R_definitional(a, k, cap)


def is_interval(points):
    return points[-1] - points[0] + 1 == len(points)


def contains(sid, a):
    """ True if ``a`` belongs to the set named by ``sid`` """
    if a.degree != sid.n:
        return False
    if not is_order_preserving(a):
        return False
    kind = sid.kind
    if kind == 'O':
        return True
    if kind == 'IO':
        return is_interval(image(a))
    if kind == 'O_Y':
        return set(a.images) <= set(sid.y)
    if kind == 'L':
        return in_L(a, sid.k)
    if kind == 'R':
        return in_R(a, sid.k)
    if kind == 'Z':
        return in_Z(a, sid.k)
    if kind == 'R1_STAR':
        return in_R(a, 1) and a(3) >= 3
    if kind == 'Z1_STAR':
        return in_Z(a, 1) and a(3) >= 3
    raise ValueError(f"Unknown set kind {repr(kind)}")


def check_store(store):
    """ Raise ValueError unless every element satisfies the store's label """
    if store.label is None:
        return
    for t in store:
        if not contains(store.label, t):
            raise ValueError(f"{t} does not belong to {store.label}")


def load_store(filename):
    """
    Load a store written by :func:`orderzero.store.save_store`. A labeled
    store must hold members of its set only (ValueError otherwise).
    """
    meta, store = read_store(filename)
    if meta.get('id') is not None:
        store.label = semigroup_id(meta['id'], meta['n'], k=meta.get('k'), y=meta.get('y'))
        check_store(store)
    return store


# ============================ enumeration ============================

def iter_order_preserving(n):
    """
    All of O_n as nondecreasing image words, in lexicographic order:

        >>> [str(t) for t in iter_order_preserving(2)]
        ['[1,1]', '[1,2]', '[2,2]']
    """
    trusted = Transformation._trusted
    for word in itertools.combinations_with_replacement(range(1, n+1), n):
        yield trusted(word)


def _check_cap(n, cap):
    cap = config.enumeration_cap(cap)
    if n > cap:
        raise LimitExceeded(
            f"Enumeration is capped at n={cap}, got n={n}; closed-form counts are still available"
        )


def enumerate_set(sid, cap=None):
    """
    Return the elements of the set named by ``sid``:

        >>> [str(t) for t in enumerate_set(semigroup_id('R', 3, k=1))]
        ['[1,1,1]', '[1,1,2]', '[1,1,3]']
    """
    _check_cap(sid.n, cap)
    store = ElementStore(sid.n, label=sid)
    if sid.kind == 'O':
        store.update(iter_order_preserving(sid.n))
    else:
        store.update(a for a in iter_order_preserving(sid.n) if contains(sid, a))
    logger.debug("enumerated %s: %d elements", sid, len(store))
    return store


def enumerate_O(n, cap=None):
    return enumerate_set(semigroup_id('O', n), cap)


def layer(store, r):
    """ Elements of ``store`` whose image has exactly ``r`` points """
    if r < 1:
        raise ValueError(f"Layer index must be positive, got {repr(r)}")
    return store.filter(lambda t: len(set(t.images)) == r)


def captive_set(y, n):
    """
    Captive points of ``Y``: the endpoints 1 and n, and the interior
    points whose both neighbours are in ``Y``.

        >>> captive_set({1, 2}, 3)
        (1,)
        >>> captive_set({2, 3, 4}, 5)
        (3,)
    """
    y = set(y)
    if not y or min(y) < 1 or max(y) > n:
        raise ValueError(f"Y={sorted(y)} must be a nonempty subset of 1..{n}")
    return tuple(
        p for p in sorted(y)
        if p in (1, n) or (p - 1 in y and p + 1 in y)
    )


# ============================ proof sets ============================

class ProofSets(NamedTuple):
    """
    Sets used to count R_k and Z_k for 2 <= k <= n-1.

    ``fixed_singleton``: k a^{-1} = {k};
    ``missing_point``: k not in Im;
    ``endpoints_and_point``: {1, k, n} in Im;
    ``endpoints_fixed_singleton``: {1, n} in Im and k a^{-1} = {k}.
    """
    fixed_singleton: ElementStore
    missing_point: ElementStore
    endpoints_and_point: ElementStore
    endpoints_fixed_singleton: ElementStore


def proof_sets(n, k, cap=None):
    if not 2 <= k <= n - 1:
        raise ValueError(f"k={repr(k)} is out of range 2..{n-1}")
    all_maps = enumerate_O(n, cap)

    def fixed(a):
        return preimage(a, k) == (k,)

    def endpoints(a):
        return a(1) == 1 and a(n) == n

    return ProofSets(
        fixed_singleton=all_maps.filter(fixed),
        missing_point=all_maps.filter(lambda a: k not in a.images),
        endpoints_and_point=all_maps.filter(lambda a: endpoints(a) and k in a.images),
        endpoints_fixed_singleton=all_maps.filter(lambda a: endpoints(a) and fixed(a)),
    )


def parse_set_name(name, n, k=None, y=None):
    """
    Resolve a command-line set name to a :class:`SemigroupId`:

        >>> parse_set_name('z1', 4)
        SemigroupId(kind='Z', n=4, k=1, y=None)
        >>> parse_set_name('ln', 5)
        SemigroupId(kind='L', n=5, k=5, y=None)
        >>> parse_set_name('r', 3, k=2)
        SemigroupId(kind='R', n=3, k=2, y=None)
    """
    key = name.strip().lower()
    simple = {'on': 'O', 'ion': 'IO', 'r1star': 'R1_STAR', 'z1star': 'Z1_STAR'}
    if key in simple:
        return semigroup_id(simple[key], n)
    if key == 'ony':
        if y is None:
            raise ValueError("Set 'ony' needs --y")
        return semigroup_id('O_Y', n, y=y)
    if key and key[0] in 'lrz':
        suffix = key[1:]
        kind = key[0].upper()
        if suffix == '':
            if k is None:
                raise ValueError(f"Set {repr(name)} needs --k")
            return semigroup_id(kind, n, k=k)
        if suffix == 'n':
            return semigroup_id(kind, n, k=n)
        if suffix.isdigit():
            if k is not None and k != int(suffix):
                raise ValueError(f"Set {repr(name)} conflicts with --k {k}")
            return semigroup_id(kind, n, k=int(suffix))
    raise ValueError(
        f"Unknown set {repr(name)}; use on, ion, ony, l/r/z (with --k), "
        f"l1, ln, r1, rn, z1, zn, r1star or z1star"
    )


def without_identity(store):
    """
    ``store`` minus the identity map. Generating sets of monoids such as
    IO_n are stated up to the identity, which is the empty product.
    """
    one = identity(store.degree)
    return store.filter(lambda t: t != one)
