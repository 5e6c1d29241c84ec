import pytest

from orderzero.counts import (
    card,
    card_endpoints_and_point,
    card_endpoints_fixed_singleton,
    card_fixed_singleton,
    card_IO,
    card_L1_and_Ln,
    card_missing_point,
    card_O,
    card_O_Y,
    rank_formula,
)
from orderzero.enumeration import enumerate_set, proof_sets, semigroup_id
from orderzero.utils import binomial, nonempty_subsets


def _ids(n):
    ids = [semigroup_id('O', n), semigroup_id('IO', n)]
    if n >= 2:
        ids += [semigroup_id(kind, n, k=k) for kind in 'LRZ' for k in range(1, n+1)]
    if n >= 3:
        ids += [semigroup_id('R1_STAR', n), semigroup_id('Z1_STAR', n)]
    ids += [semigroup_id('O_Y', n, y=y) for y in nonempty_subsets(range(1, n+1))]
    return ids


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
def test_card_matches_enumeration(n):
    for sid in _ids(n):
        assert card(sid) == len(enumerate_set(sid)), sid


@pytest.mark.slow
def test_card_matches_enumeration_n7():
    for sid in _ids(7):
        assert card(sid) == len(enumerate_set(sid)), sid


@pytest.mark.parametrize(['sid', 'value'], [
    (semigroup_id('R', 3, k=2), 5),
    (semigroup_id('L', 4, k=2), 25),
    (semigroup_id('Z', 3, k=1), 2),
    (semigroup_id('Z', 3, k=2), 5),
    (semigroup_id('O', 8), 6435),
    (semigroup_id('IO', 3), 8),
])
def test_card_values(sid, value):
    assert card(sid) == value


def test_cards_are_exact_for_large_n():
    assert card_O(100) == binomial(198, 98) + binomial(198, 99)
    assert card(semigroup_id('L', 1000, k=1)) > 10**590
    assert card(semigroup_id('R', 50, k=25)) == (card_O(50) - card_fixed_singleton(50, 25)
                                                 - card_missing_point(50, 25))


def test_helper_cards():
    assert card_IO(1) == 1
    assert card_O_Y(4, 2) == 5
    assert card_L1_and_Ln(3) == 1
    assert card_fixed_singleton(4, 2) == 3
    assert card_missing_point(4, 2) == 15


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_proof_set_counts(n):
    for k in range(2, n):
        ps = proof_sets(n, k)
        assert len(ps.fixed_singleton) == card_fixed_singleton(n, k)
        assert len(ps.missing_point) == card_missing_point(n, k)
        assert len(ps.endpoints_and_point) == card_endpoints_and_point(n, k)
        assert len(ps.endpoints_fixed_singleton) == card_endpoints_fixed_singleton(n, k)


def test_card_of_zero_divisors_needs_n2():
    with pytest.raises(ValueError):
        card(semigroup_id('L', 1, k=1))


@pytest.mark.parametrize(['sid', 'value'], [
    (semigroup_id('O', 4), 5),
    (semigroup_id('IO', 5), 4),
    (semigroup_id('L', 4, k=1), 5),
    (semigroup_id('L', 4, k=4), 5),
    (semigroup_id('L', 3, k=2), 2),
    (semigroup_id('L', 6, k=3), 8),
    (semigroup_id('R', 2, k=1), 1),
    (semigroup_id('R', 3, k=1), 2),
    (semigroup_id('R', 6, k=6), 8),
    (semigroup_id('Z', 3, k=1), 1),
    (semigroup_id('Z', 4, k=4), 2),
    (semigroup_id('Z', 7, k=1), 9),
    (semigroup_id('R1_STAR', 6), 5),
    (semigroup_id('Z1_STAR', 6), 5),
    (semigroup_id('O_Y', 5, y=[1, 2, 3, 4]), 4 + 3),
    (semigroup_id('O_Y', 5, y=[2, 4]), 4),
    (semigroup_id('O_Y', 5, y=[3]), 1),
])
def test_rank_formula(sid, value):
    assert rank_formula(sid) == value


@pytest.mark.parametrize('sid', [
    semigroup_id('R', 4, k=2),
    semigroup_id('Z', 5, k=3),
    semigroup_id('IO', 2),
    semigroup_id('R1_STAR', 3),
])
def test_rank_formula_undefined(sid):
    with pytest.raises(ValueError):
        rank_formula(sid)
