"""
:mod:`orderzero.transformations` is a module with full transformations
of the chain ``X_n = {1 < 2 < ... < n}`` and their arithmetic.

Maps act on the right: ``x(ab) = (xa)b``, so ``compose(a, b)`` (or
``a * b``) applies ``a`` first. Points are 1-based everywhere in the
public API.
"""
import functools
import re
from typing import NamedTuple, Tuple, FrozenSet

from orderzero.utils import is_int

_WORD_RE = re.compile(r'^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$')


class DegreeMismatch(ValueError):
    """ Transformations of different degrees were combined. """


@functools.total_ordering
class Transformation:
    """
    An immutable full transformation of the chain X_n, stored as its
    image word ``(1a, 2a, ..., na)``.

        >>> a = Transformation.parse("[1,1,2]")
        >>> a
        Transformation('[1,1,2]')
        >>> str(a * Transformation((1, 1, 3)))
        '[1,1,1]'
        >>> a.degree, a(3)
        (3, 2)

    Transformations compare equal when their image words are equal and
    are ordered by (degree, image word), which is the lexicographic order
    within one degree.
    """
    __slots__ = ('images', '_hash')

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("Transformation degree must be positive")
        for x, value in enumerate(images, 1):
            if not is_int(value) or not 1 <= value <= n:
                raise ValueError(
                    f"Image of point {x} is {repr(value)}; it must be in 1..{n}"
                )
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images):
        """ Build from an already validated tuple. """
        obj = cls.__new__(cls)
        obj.images = images
        obj._hash = hash(images)
        return obj

    @classmethod
    def parse(cls, text):
        """
        Parse the canonical text form:

            >>> Transformation.parse(" [2, 2,3] ")
            Transformation('[2,2,3]')
            >>> Transformation.parse("2,2,3")
            Traceback (most recent call last):
            ...
            ValueError: Invalid transformation: '2,2,3'

        """
        m = _WORD_RE.match(text)
        if not m or m.group(1) is None:
            raise ValueError(f"Invalid transformation: {repr(text)}")
        return cls(int(part) for part in m.group(1).split(','))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        """ Image of point ``x`` """
        return self.images[x-1]

    def __mul__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return (len(self.images), self.images) < (len(other.images), other.images)

    def __hash__(self):
        return self._hash

    def __setattr__(self, key, value):
        if hasattr(self, '_hash'):
            raise AttributeError("Transformation is immutable")
        object.__setattr__(self, key, value)

    def __reduce__(self):
        return (Transformation, (self.images,))

    def __iter__(self):
        return iter(self.images)

    def __str__(self):
        return '[' + ','.join(map(str, self.images)) + ']'

    def __repr__(self):
        return f"Transformation('{self}')"


def make_transformation(n, images):
    """
    Return the transformation of degree ``n`` with the given image word.

        >>> make_transformation(3, [1, 1, 2])
        Transformation('[1,1,2]')
        >>> make_transformation(4, [1, 1, 2])
        Traceback (most recent call last):
        ...
        ValueError: Expected 4 images, got 3

    """
    images = tuple(images)
    check_degree_value(n)
    if len(images) != n:
        raise ValueError(f"Expected {n} images, got {len(images)}")
    return Transformation(images)


def check_degree_value(n):
    if not is_int(n) or n < 1:
        raise ValueError(f"Degree must be a positive integer, got {repr(n)}")


def _check_degree(a, b):
    if len(a.images) != len(b.images):
        raise DegreeMismatch(
            f"Degree mismatch: {a} has degree {a.degree}, {b} has degree {b.degree}"
        )


def compose(a, b):
    """
    Composite ``ab``: apply ``a``, then ``b``.

        >>> str(compose(Transformation((1, 1, 2)), Transformation((1, 2, 2))))
        '[1,1,2]'
    """
    _check_degree(a, b)
    bi = b.images
    return Transformation._trusted(tuple([bi[x-1] for x in a.images]))


def product(first, *rest):
    """ Left-to-right product of one or more transformations """
    result = first
    for t in rest:
        result = compose(result, t)
    return result


def _check_point(n, k, name='k'):
    if not is_int(k) or not 1 <= k <= n:
        raise ValueError(f"{name}={repr(k)} is out of range 1..{n}")


def constant(n, k):
    """ The constant map pi_k of degree ``n`` """
    check_degree_value(n)
    _check_point(n, k)
    return Transformation._trusted((k,) * n)


def identity(n):
    check_degree_value(n)
    return Transformation._trusted(tuple(range(1, n+1)))


def image(a):
    """
    Sorted image of ``a``:

        >>> image(Transformation((1, 1, 2)))
        (1, 2)
    """
    return tuple(sorted(set(a.images)))


def rank_of(a):
    """ Size of the image """
    return len(set(a.images))


def fix_set(a):
    """
        >>> fix_set(Transformation((1, 3, 3, 4)))
        (1, 3, 4)
    """
    return tuple(x for x, y in enumerate(a.images, 1) if x == y)


def preimage(a, y):
    """ Points mapped to ``y`` """
    return tuple(x for x, value in enumerate(a.images, 1) if value == y)


def is_order_preserving(a):
    im = a.images
    return all(im[i] <= im[i+1] for i in range(len(im)-1))


def is_order_decreasing(a):
    return all(y <= x for x, y in enumerate(a.images, 1))


def is_order_increasing(a):
    return all(x <= y for x, y in enumerate(a.images, 1))


def is_injective_on(a, points):
    values = [a(x) for x in points]
    return len(set(values)) == len(values)


def dual(a):
    """
    Conjugate of ``a`` under the chain reversal ``x -> n+1-x``:

        >>> dual(Transformation((1, 1, 2)))
        Transformation('[2,3,3]')
    """
    n = len(a.images)
    im = a.images
    return Transformation._trusted(tuple(n + 1 - im[n - x] for x in range(1, n+1)))


class OrderedPartition:
    """
    A partition of X_n into nonempty blocks, kept in a fixed order.

    Equality ignores the order of blocks, so kernels computed in
    different ways compare equal when they are the same partition:

        >>> OrderedPartition(3, [[3], [1, 2]]) == OrderedPartition(3, [[1, 2], [3]])
        True
        >>> OrderedPartition(3, [[1, 2], [3]])
        OrderedPartition(3, [[1, 2], [3]])
    """
    __slots__ = ('degree', 'blocks', '_key')

    def __init__(self, degree, blocks):
        blocks = tuple(tuple(sorted(set(b))) for b in blocks)
        seen = set()
        for block in blocks:
            if not block:
                raise ValueError("Partition blocks must be nonempty")
            for x in block:
                _check_point(degree, x, 'point')
                if x in seen:
                    raise ValueError(f"Point {x} appears in more than one block")
                seen.add(x)
        if len(seen) != degree:
            missing = sorted(set(range(1, degree+1)) - seen)
            raise ValueError(f"Blocks do not cover points {missing}")
        self.degree = degree
        self.blocks = blocks
        self._key = frozenset(frozenset(b) for b in blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, OrderedPartition):
            return NotImplemented
        return self.degree == other.degree and self._key == other._key

    def __hash__(self):
        return hash((self.degree, self._key))

    def __repr__(self):
        return f"OrderedPartition({self.degree}, {[list(b) for b in self.blocks]})"

    @property
    def is_convex(self):
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    @property
    def is_ordered(self):
        return all(
            self.blocks[i][-1] < self.blocks[i+1][0]
            for i in range(len(self.blocks)-1)
        )

    def block_of(self, x):
        for block in self.blocks:
            if x in block:
                return block
        raise ValueError(f"Point {x} is not in the partition")

    def refines(self, other):
        """ True if every block lies inside a block of ``other`` """
        if self.degree != other.degree:
            raise DegreeMismatch("Partitions of different degrees")
        return all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def pairs(self):
        """ The equivalence relation as a frozenset of pairs """
        return frozenset((x, y) for b in self.blocks for x in b for y in b)


class TabularForm(NamedTuple):
    blocks: OrderedPartition
    values: Tuple[int, ...]


def kernel(a):
    """
    Partition of X_n by equal images, blocks ordered by their image:

        >>> kernel(Transformation((1, 1, 4, 4, 5)))
        OrderedPartition(5, [[1, 2], [3, 4], [5]])
    """
    classes = {}
    for x, y in enumerate(a.images, 1):
        classes.setdefault(y, []).append(x)
    return OrderedPartition(a.degree, [classes[y] for y in sorted(classes)])


def tabular_form(a):
    """
    Block presentation ``(A_1 .. A_r / a_1 < .. < a_r)`` of an
    order-preserving map:

        >>> tab = tabular_form(Transformation((1, 1, 3, 3, 4)))
        >>> tab.blocks, tab.values
        (OrderedPartition(5, [[1, 2], [3, 4], [5]]), (1, 3, 4))
    """
    if not is_order_preserving(a):
        raise ValueError(f"{a} is not order-preserving; its kernel blocks need not be convex")
    return TabularForm(kernel(a), image(a))


def from_tabular_form(tab):
    """ Rebuild the transformation described by a tabular form """
    blocks, values = tab
    if len(blocks) != len(values):
        raise ValueError(f"{len(blocks)} blocks but {len(values)} values")
    if any(values[i] >= values[i+1] for i in range(len(values)-1)):
        raise ValueError(f"Values {values} are not strictly increasing")
    images = [0] * blocks.degree
    for block, value in zip(blocks, values):
        for x in block:
            images[x-1] = value
    return make_transformation(blocks.degree, images)


def equivalence_closure(pairs, n):
    """
    Partition induced by the smallest equivalence on X_n containing
    ``pairs``; blocks are ordered by their least point.

        >>> equivalence_closure({(1, 2), (3, 4)}, 5)
        OrderedPartition(5, [[1, 2], [3, 4], [5]])
    """
    parent = list(range(n+1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        _check_point(n, x, 'point')
        _check_point(n, y, 'point')
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    classes = {}
    for x in range(1, n+1):
        classes.setdefault(find(x), []).append(x)
    return OrderedPartition(n, [classes[r] for r in sorted(classes)])


def shift(a, offset=2):
    """
    The map ``x -> (x+offset)a - offset`` on X_{n-offset}; ``a`` must
    send ``offset+1..n`` into itself.

        >>> shift(Transformation((1, 1, 4, 4, 5)))
        Transformation('[2,2,3]')
    """
    n = a.degree
    m = n - offset
    if offset < 0 or m < 1:
        raise ValueError(f"Can't shift a map of degree {n} by {offset}")
    images = []
    for x in range(1, m+1):
        y = a(x + offset) - offset
        if y < 1:
            raise ValueError(
                f"{a} sends {x + offset} to {a(x + offset)}, outside {offset+1}..{n}"
            )
        images.append(y)
    return Transformation._trusted(tuple(images))


def split_at_fixed_point(a, k):
    """
    For ``a`` with ``k a^{-1} = {k}`` (2 <= k <= n-1) return the pair of
    restrictions ``(a on 1..k-1, x -> (x+k)a - k on 1..n-k)``.

        >>> split_at_fixed_point(Transformation((1, 1, 3, 5, 5)), 3)
        (Transformation('[1,1]'), Transformation('[2,2]'))
    """
    n = a.degree
    if not 2 <= k <= n - 1:
        raise ValueError(f"k={repr(k)} is out of range 2..{n-1}")
    if preimage(a, k) != (k,):
        raise ValueError(f"{k} is not the only point {a} sends to {k}")
    if not is_order_preserving(a):
        raise ValueError(f"{a} is not order-preserving")
    left = Transformation._trusted(a.images[:k-1])
    right = Transformation._trusted(tuple(y - k for y in a.images[k:]))
    return left, right
