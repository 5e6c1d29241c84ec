"""
Closed-form cardinalities and ranks. All values are exact Python
integers; nothing here is capped.
"""
from orderzero.enumeration import captive_set, semigroup_id
from orderzero.utils import binomial


def card_O(n):
    """ |O_n| = C(2n-1, n-1) """
    return binomial(2*n - 1, n - 1)


def card_IO(n):
    """ |IO_n|: an image of size r is one of n-r+1 intervals """
    return sum(binomial(n - 1, r - 1) * (n - r + 1) for r in range(1, n+1))


def card_O_Y(n, y_size):
    """ |O_n(Y)| = C(n+|Y|-1, n) """
    return binomial(n + y_size - 1, n)


def card_L1_and_Ln(n):
    """ |L_1 intersected with L_n| = C(2n-3, n-3) """
    return binomial(2*n - 3, n - 3)


def card_fixed_singleton(n, k):
    """ |{a : k a^{-1} = {k}}| for 2 <= k <= n-1 """
    return binomial(2*k - 3, k - 2) * binomial(2*n - 2*k - 1, n - k - 1)


def card_missing_point(n, k):
    """ |{a : k not in Im(a)}| """
    return binomial(2*n - 2, n - 2)


def card_endpoints_and_point(n, k):
    """ |{a : {1, k, n} in Im(a)}| for 2 <= k <= n-1 """
    return binomial(2*n - 4, n - 1)


def card_endpoints_fixed_singleton(n, k):
    """ |{a : {1, n} in Im(a), k a^{-1} = {k}}| for 2 <= k <= n-1 """
    return binomial(2*k - 4, k - 2) * binomial(2*n - 2*k - 2, n - k - 1)


def _middle(n, k):
    return 2 <= k <= n - 1


def card(sid):
    """
    Closed-form size of the set named by ``sid``:

        >>> card(semigroup_id('R', 3, k=2))
        5
        >>> card(semigroup_id('L', 4, k=2))
        25
        >>> card(semigroup_id('Z', 3, k=1))
        2
    """
    kind, n, k = sid.kind, sid.n, sid.k
    if kind == 'O':
        return card_O(n)
    if kind == 'IO':
        return card_IO(n)
    if kind == 'O_Y':
        return card_O_Y(n, len(sid.y))
    if kind == 'R1_STAR':
        # isomorphic to O_{n-2}
        return card_O(n - 2)
    if kind == 'Z1_STAR':
        # isomorphic to L_1 on a chain of size n-2
        return binomial(2*n - 6, n - 4)

    if n < 2:
        raise ValueError(f"|{kind}_k| is given for n >= 2, got n={n}")
    if kind == 'L':
        if _middle(n, k):
            return binomial(2*n - 2, n - 2) + binomial(2*n - 3, n - 2)
        return binomial(2*n - 2, n - 2)
    if kind == 'R':
        if _middle(n, k):
            return binomial(2*n - 2, n - 1) - card_fixed_singleton(n, k)
        return binomial(2*n - 3, n - 1)
    if kind == 'Z':
        if n == 2:
            # Z_1 = R_1 and Z_2 = R_2
            return card(semigroup_id('R', n, k=k))
        if _middle(n, k):
            return (card(semigroup_id('R', n, k=k))
                    - (card_endpoints_and_point(n, k) - card_endpoints_fixed_singleton(n, k)))
        return binomial(2*n - 4, n - 2)
    raise ValueError(f"No closed form for {repr(kind)}")


def rank_formula(sid):
    """
    Rank of the set named by ``sid`` as stated for it:

        >>> rank_formula(semigroup_id('L', 3, k=1))
        3
        >>> rank_formula(semigroup_id('Z', 3, k=1))
        1
        >>> rank_formula(semigroup_id('O_Y', 3, y=[1, 2]))
        3
    """
    kind, n, k = sid.kind, sid.n, sid.k
    if kind == 'O':
        if n < 2:
            raise ValueError(f"rank(O_n) is given for n >= 2, got n={n}")
        return n + 1
    if kind == 'IO':
        if n < 3:
            raise ValueError(f"rank(IO_n) is given for n >= 3, got n={n}")
        return n - 1
    if kind == 'O_Y':
        r = len(sid.y)
        if r == 1:
            return 1
        if r == n:
            return rank_formula(semigroup_id('O', n))
        return binomial(n - 1, r - 1) + len(captive_set(sid.y, n))
    if kind == 'R1_STAR':
        if n < 4:
            raise ValueError(f"rank(R_1*) is given for n >= 4, got n={n}")
        return n - 1
    if kind == 'Z1_STAR':
        if n < 5:
            raise ValueError(f"rank(Z_1*) is given for n >= 5, got n={n}")
        return 2*n - 7
    if kind == 'L':
        if n < 3:
            raise ValueError(f"rank(L_k) is given for n >= 3, got n={n}")
        return 2*n - 4 if _middle(n, k) else 2*n - 3
    if kind in ('R', 'Z'):
        if _middle(n, k):
            raise ValueError(f"{kind}_{k} is not a subsemigroup of O_{n}; it has no rank")
        if n == 2:
            return 1
        if kind == 'R':
            return 2 if n == 3 else 2*n - 4
        small = {3: 1, 4: 2}
        return small.get(n, 2*n - 5)
    raise ValueError(f"No rank formula for {repr(kind)}")
