import pytest

from orderzero.config import SearchBudget
from orderzero.counts import rank_formula
from orderzero.engine import (
    greedy_generating_set,
    is_generating_set,
    rank_bounds,
    rank_exact,
    rank_lower_bound_images,
    undecomposables,
)
from orderzero.engine.rank import candidate_key
from orderzero.enumeration import enumerate_set, semigroup_id, without_identity
from orderzero.families import family, z1_minimal_generators
from orderzero.store import ElementStore
from orderzero.utils import nonempty_subsets
from utils import T, words


def _exact(sid):
    return rank_exact(enumerate_set(sid))


def test_candidate_key():
    elements = [T(1, 1, 2), T(1, 2, 3), T(1, 1, 1), T(1, 2, 2)]
    assert words(sorted(elements, key=candidate_key)) == ['[1,2,3]', '[1,1,2]', '[1,2,2]', '[1,1,1]']


@pytest.mark.parametrize('n', [3, 4, 5])
def test_rank_of_IO(n):
    io = without_identity(enumerate_set(semigroup_id('IO', n)))
    cert = rank_exact(io)
    assert cert.mode == 'exact'
    assert cert.rank == n - 1


def test_semigroup_rank_of_IO_counts_the_identity():
    cert = rank_exact(enumerate_set(semigroup_id('IO', 4)))
    assert cert.rank == 4


@pytest.mark.parametrize(['kind', 'n', 'k', 'value'], [
    ('L', 3, 1, 3),
    ('L', 4, 1, 5),
    ('L', 3, 3, 3),
    ('L', 3, 2, 2),
    ('L', 4, 2, 4),
    ('R', 3, 1, 2),
    ('R', 4, 1, 4),
    ('R', 4, 4, 4),
    ('Z', 3, 1, 1),
    ('Z', 4, 1, 2),
    ('Z', 5, 1, 5),
    ('Z', 5, 5, 5),
])
def test_exact_ranks(kind, n, k, value):
    cert = _exact(semigroup_id(kind, n, k=k))
    assert cert.search_exhaustive
    assert cert.rank == value == rank_formula(semigroup_id(kind, n, k=k))
    assert cert.lower_bound == cert.upper_bound == value


def test_rank_witness_is_deterministic():
    cert = _exact(semigroup_id('Z', 4, k=1))
    assert words(cert.witness) == ['[1,1,2,3]', '[1,1,3,3]']
    assert cert == _exact(semigroup_id('Z', 4, k=1))


@pytest.mark.parametrize('n', [4, 5])
def test_rank_of_restricted_range(n):
    for y in nonempty_subsets(range(1, n+1), 2, n - 1):
        sid = semigroup_id('O_Y', n, y=y)
        assert _exact(sid).rank == rank_formula(sid), y


@pytest.mark.parametrize('sid', [
    semigroup_id('L', 4, k=2),
    semigroup_id('R', 4, k=1),
    semigroup_id('Z', 5, k=1),
    semigroup_id('O', 3),
])
def test_witness_generates_and_contains_undecomposables(sid):
    store = enumerate_set(sid)
    cert = rank_exact(store)
    assert is_generating_set(cert.witness, store)
    assert set(cert.mandatory) <= set(cert.witness)
    assert set(cert.mandatory) == undecomposables(store).as_set()


def test_rank_of_O3_is_a_semigroup_rank():
    # n + 1: the identity can't be a product of other elements
    assert _exact(semigroup_id('O', 3)).rank == 4


def test_bounds_when_set_is_too_large():
    store = enumerate_set(semigroup_id('Z', 5, k=1))
    cert = rank_exact(store, SearchBudget(max_elements=5))
    assert cert.mode == 'bounds'
    assert 'search limit' in cert.reason
    assert cert.lower_bound <= 5 <= cert.upper_bound
    assert is_generating_set(cert.witness, store)


def test_bounds_when_depth_runs_out():
    # every element of rank 2 in O_3 is a product of two others
    store = enumerate_set(semigroup_id('O', 3))
    cert = rank_exact(store, SearchBudget(max_depth=0))
    assert not cert.search_exhaustive
    assert 'depth' in cert.reason
    assert 2 <= cert.lower_bound <= 4 <= cert.upper_bound


def test_bounds_when_products_run_out():
    store = enumerate_set(semigroup_id('Z', 5, k=1))
    cert = rank_exact(store, SearchBudget(max_products=1))
    assert cert.mode == 'bounds'
    assert 'product budget' in cert.reason
    assert cert.lower_bound <= 5 <= cert.upper_bound


@pytest.mark.parametrize('n', [5, 6])
def test_rank_bounds_with_known_generators(n):
    store = enumerate_set(semigroup_id('Z', n, k=1))
    cert = rank_bounds(store, known_generators=list(z1_minimal_generators(n)))
    assert cert.upper_bound == 2*n - 5
    assert cert.lower_bound <= 2*n - 5
    assert set(cert.witness) == set(z1_minimal_generators(n))


def test_rank_bounds_ignores_foreign_generators():
    store = enumerate_set(semigroup_id('R', 4, k=1))
    cert = rank_bounds(store, known_generators=[T(1, 2, 3, 4)])
    assert is_generating_set(cert.witness, store)


def test_greedy_generating_set():
    store = enumerate_set(semigroup_id('L', 5, k=2))
    gens = greedy_generating_set(store)
    assert is_generating_set(gens, store)
    assert len(gens) >= rank_formula(semigroup_id('L', 5, k=2))


def test_rank_lower_bound_images():
    l2 = enumerate_set(semigroup_id('L', 4, k=2))
    # top layer of L_2: D_3(IO_4), two images and three kernels
    assert rank_lower_bound_images(l2) == 3
    assert rank_lower_bound_images(ElementStore(3, [T(1, 1, 1)])) == 1


def test_empty_set_has_no_rank():
    with pytest.raises(ValueError):
        rank_exact(ElementStore(3))
    with pytest.raises(ValueError):
        rank_bounds(ElementStore(3))


@pytest.mark.slow
@pytest.mark.parametrize('n', [6, 7, 8])
def test_rank_bounds_at_larger_n(n):
    cases = [
        (semigroup_id('L', n, k=2), list(family('B', n)), 2*n - 4),
        (semigroup_id('R', n, k=1), list(family('C', n)) + list(family('F', n)), 2*n - 4),
        (semigroup_id('Z', n, k=1), list(z1_minimal_generators(n)), 2*n - 5),
    ]
    for sid, gens, value in cases:
        cert = rank_bounds(enumerate_set(sid), known_generators=gens)
        assert cert.upper_bound == value
        assert cert.lower_bound <= value
