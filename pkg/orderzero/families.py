"""
:mod:`orderzero.families` contains constructors for the named maps and
generator families of the zero-divisor semigroups of O_n, and the
witnesses that certify membership in L_k and R_k.

Index ranges are validated strictly; a family below its degree
threshold is an error, not an empty family.
"""
import logging
from typing import NamedTuple, Tuple

from orderzero.transformations import (
    Transformation,
    compose,
    constant,
    identity,
    image,
    is_order_preserving,
)
from orderzero.utils import is_int

logger = logging.getLogger(__name__)


class GeneratorFamily(NamedTuple):
    name: str
    degree: int
    elements: Tuple[Transformation, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements


def _check_index(name, i, low, high):
    if not is_int(i) or not low <= i <= high:
        raise ValueError(f"{name}: index {repr(i)} is out of range {low}..{high}")


def _build(n, func):
    return Transformation._trusted(tuple(func(x) for x in range(1, n+1)))


# ============================ single maps ============================

def beta(n, i):
    """ x -> x+1 for x <= i, identity above i """
    _check_index('beta', i, 1, n - 1)
    return _build(n, lambda x: x + 1 if x <= i else x)


def gamma(n, i):
    """ identity up to i, x -> x-1 above i """
    _check_index('gamma', i, 1, n - 1)
    return _build(n, lambda x: x if x <= i else x - 1)


def xi(n, i):
    _check_index('xi', i, 2, n - 1)

    def f(x):
        if x <= i - 2:
            return x
        if x == i - 1:
            return i
        if x <= n - 1:
            return x
        return n - 1
    return _build(n, f)


def zeta(n, i):
    _check_index('zeta', i, 2, n - 1)

    def f(x):
        if x == 1:
            return 2
        if x <= i:
            return x
        if x == i + 1:
            return i
        return x
    return _build(n, f)


def zeta_prime(n, i):
    """ The L_1 factor of zeta_i = zeta'_i beta_{n-1} """
    _check_index('zeta_prime', i, 2, n - 2)

    def f(x):
        if x <= i:
            return max(x - 1, 1)
        if x == i + 1:
            return i - 1
        return x - 1
    return _build(n, f)


def lambda_(n, i):
    _check_index('lambda', i, 2, n)
    return _build(n, lambda x: x if x == 1 else (x - 1 if x <= i else x))


def delta(n, i):
    _check_index('delta', i, 3, n - 1)

    def f(x):
        if x <= 2:
            return 1
        if x == i:
            return i + 1
        return x
    return _build(n, f)


def mu(n, i):
    _check_index('mu', i, 3, n - 1)

    def f(x):
        if x <= 2:
            return 1
        if x <= i:
            return x
        return x - 1
    return _build(n, f)


def rho(n, i):
    _check_index('rho', i, 3, n - 2)

    def f(x):
        if x <= 2:
            return 1
        if x == i:
            return i + 1
        if x == n:
            return n - 1
        return x
    return _build(n, f)


def tau(n, i):
    _check_index('tau', i, 3, n - 1)

    def f(x):
        if x <= 2:
            return 1
        if x <= i:
            return x - 1
        if x == n:
            return n - 1
        return x
    return _build(n, f)


def rho_special(n):
    """ The extra generator of the minimal generating set of Z_1 """
    if n < 5:
        raise ValueError(f"rho is defined for n >= 5, got n={n}")

    def f(x):
        if x <= 2:
            return 1
        if x <= n - 2:
            return x + 1
        return n - 1
    return _build(n, f)


def theta(n, i):
    """ The idempotent with Fix = X_n - {i} sending i to i+1 """
    _check_index('theta', i, 1, n - 1)
    return _build(n, lambda x: i + 1 if x == i else x)


def closing_factors(n):
    """
    Two elements of Z_1 whose product is ``rho_special(n)``.
    For n = 5 the second factor coincides with rho itself.
    """
    if n < 5:
        raise ValueError(f"closing factors are defined for n >= 5, got n={n}")

    def f(x):
        if x <= 2:
            return 1
        if x == 3:
            return 3
        if x <= n - 2:
            return x + 1
        return n - 1
    return _build(n, f), rho(n, 3)


# ============================ families ============================

def family_G(n):
    """ {theta_1, .., theta_{n-1}, lambda_n, 1_n}, a generating set of O_n """
    if n < 2:
        raise ValueError(f"G is defined for n >= 2, got n={n}")
    elements = [theta(n, i) for i in range(1, n)] + [lambda_(n, n), identity(n)]
    return GeneratorFamily('G', n, tuple(elements))


def _family_B(n):
    return ([gamma(n, 1)]
            + [beta(n, i) for i in range(2, n)]
            + [xi(n, i) for i in range(3, n)])


_FAMILIES = {
    # name: (min degree, builder)
    'B': (4, _family_B),
    'C': (3, lambda n: [delta(n, i) for i in range(3, n)]),
    'F': (3, lambda n: [lambda_(n, i) for i in range(2, n+1)]),
    'H': (5, lambda n: [mu(n, i) for i in range(3, n)]),
    'K': (5, lambda n: [rho(n, i) for i in range(3, n-1)]),
    'M': (5, lambda n: [tau(n, i) for i in range(3, n)]),
    'E_PLUS': (3, lambda n: [xi(n, i) for i in range(2, n)]),
    'E_MINUS': (3, lambda n: [zeta(n, i) for i in range(2, n)]),
    'D_LAYER_L1': (3, lambda n: [gamma(n, i) for i in range(1, n)]),
    'D_LAYER_LN': (3, lambda n: [beta(n, i) for i in range(1, n)]),
}

FAMILY_NAMES = tuple(_FAMILIES) + ('G',)

# lowercase identifiers used on the command line
CLI_NAMES = {
    'b': 'B', 'c': 'C', 'f': 'F', 'h': 'H', 'k': 'K', 'm': 'M',
    'eplus': 'E_PLUS', 'eminus': 'E_MINUS', 'g': 'G',
    'dlayer-l1': 'D_LAYER_L1', 'dlayer-ln': 'D_LAYER_LN',
}


def family(name, n):
    """
    Return the named family at degree ``n``:

        >>> [str(t) for t in family('C', 5)]
        ['[1,1,4,4,5]', '[1,1,3,5,5]']
        >>> len(family('B', 6))
        8
    """
    name = CLI_NAMES.get(name, name)
    if name == 'G':
        return family_G(n)
    try:
        min_degree, builder = _FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"Unknown family {repr(name)}. Known families: {', '.join(FAMILY_NAMES)}"
        ) from None
    if n < min_degree:
        raise ValueError(f"Family {name} is defined for n >= {min_degree}, got n={n}")
    return GeneratorFamily(name, n, tuple(builder(n)))


def io_generators(n):
    """ {gamma_1, .., gamma_{n-2}, beta_{n-1}}, a minimal generating set of IO_n """
    if n < 3:
        raise ValueError(f"IO_n generators are defined for n >= 3, got n={n}")
    return GeneratorFamily(
        'IO', n, tuple([gamma(n, i) for i in range(1, n-1)] + [beta(n, n-1)])
    )


def r1_star_generators(n):
    """ C together with lambda_2 and delta_3 lambda_n """
    if n < 4:
        raise ValueError(f"R_1* generators are defined for n >= 4, got n={n}")
    elements = list(family('C', n)) + [lambda_(n, 2), compose(delta(n, 3), lambda_(n, n))]
    return GeneratorFamily('R1_STAR', n, tuple(elements))


def z1_minimal_generators(n):
    """ H, M and rho: a minimal generating set of Z_1 """
    if n < 5:
        raise ValueError(f"Z_1 minimal generators are defined for n >= 5, got n={n}")
    elements = list(family('H', n)) + list(family('M', n)) + [rho_special(n)]
    return GeneratorFamily('Z1_MINIMAL', n, tuple(elements))


_SMALL_GENERATORS = {
    ('L2', 3): ((1, 1, 2), (2, 3, 3)),
    ('R1', 2): ((1, 1),),
    ('R1', 3): ((1, 1, 2), (1, 1, 3)),
    ('Z1', 2): ((1, 1),),
    ('Z1', 3): ((1, 1, 2),),
    ('Z1', 4): ((1, 1, 2, 3), (1, 1, 3, 3)),
}


def small_generators(name, n):
    """ Generating sets stated explicitly for degrees below a family's range """
    try:
        words = _SMALL_GENERATORS[name, n]
    except KeyError:
        raise ValueError(f"No explicit small generating set for {name} at n={n}") from None
    return GeneratorFamily(name, n, tuple(Transformation(w) for w in words))


# ============================ witnesses ============================

def left_witness(a, k):
    """
    Return ``b`` in O_n, ``b != pi_k``, with ``ab = pi_k``, or None if
    ``a`` is not a left zero-divisor with respect to pi_k.

        >>> left_witness(Transformation((1, 1, 2)), 1)
        Transformation('[1,1,3]')
        >>> left_witness(Transformation((1, 2, 3)), 2) is None
        True
    """
    n = a.degree
    if not 1 <= k <= n:
        raise ValueError(f"k={repr(k)} is out of range 1..{n}")
    if not is_order_preserving(a):
        raise ValueError(f"{a} is not order-preserving")
    if n == 1:
        return None
    im = image(a)
    has_one, has_n = im[0] == 1, im[-1] == n
    if k == 1:
        return None if has_n else _build(n, lambda x: n if x == n else 1)
    if k == n:
        return None if has_one else _build(n, lambda x: 1 if x == 1 else n)
    if not has_n:
        return _build(n, lambda x: n if x == n else k)
    if not has_one:
        return _build(n, lambda x: 1 if x == 1 else k)
    return None


def right_witness(a, k):
    """
    Return ``pi_i`` for the least ``i != k`` with ``ia = k``, or None.

        >>> right_witness(Transformation((1, 1, 2)), 1)
        Transformation('[2,2,2]')
    """
    n = a.degree
    if not 1 <= k <= n:
        raise ValueError(f"k={repr(k)} is out of range 1..{n}")
    if not is_order_preserving(a):
        raise ValueError(f"{a} is not order-preserving")
    for i, value in enumerate(a.images, 1):
        if value == k and i != k:
            return constant(n, i)
    return None
