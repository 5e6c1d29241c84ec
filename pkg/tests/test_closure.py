import pytest

from orderzero.engine import (
    MultiplicationTable,
    closure,
    extend_closure,
    find_closure_violation,
    is_generating_set,
    is_subsemigroup,
    kernel_refines_product,
    undecomposables,
)
from orderzero.engine.closure import ProductBudgetExhausted, _Budget
from orderzero.enumeration import enumerate_O, enumerate_set, semigroup_id
from orderzero.families import family, family_G, io_generators
from orderzero.store import ElementStore
from orderzero.transformations import DegreeMismatch, compose, identity
from utils import T, naive_closure, words


def test_closure_words():
    res = closure([T(1, 1, 2), T(1, 1, 3)])
    assert words(res.elements) == ['[1,1,2]', '[1,1,3]', '[1,1,1]']
    assert res.generator_count == 2
    for t in res.elements:
        assert res.word_product(t) == t


def test_closure_without_words():
    res = closure([T(1, 1, 2)], record_words=False)
    assert res.word_witness is None
    assert words(res.elements) == ['[1,1,2]', '[1,1,1]']


def test_closure_invalid_input():
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(DegreeMismatch):
        closure([T(1, 1), T(1, 1, 1)])


def test_closure_budget():
    with pytest.raises(ProductBudgetExhausted):
        closure(list(family_G(4)), _budget=_Budget(10))


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
def test_G_generates_O(n):
    assert is_generating_set(family_G(n), enumerate_O(n))


@pytest.mark.parametrize('n', [3, 4, 5])
def test_closure_matches_naive_closure(n):
    gens = list(io_generators(n))
    assert closure(gens).elements.as_set() == naive_closure(gens)


def test_extend_closure():
    gens = [T(1, 1, 2)]
    closed = closure(gens).elements
    extended = extend_closure(closed, gens, [T(1, 1, 3)])
    assert extended == closure([T(1, 1, 2), T(1, 1, 3)]).elements.as_set()


def test_is_generating_set():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    assert is_generating_set([T(1, 1, 2), T(1, 1, 3)], r1)
    assert not is_generating_set([T(1, 1, 2)], r1)
    assert not is_generating_set([T(1, 1, 2), T(1, 2, 3)], r1)
    assert is_generating_set([], [])


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_subsemigroups(n):
    for k in range(1, n+1):
        assert is_subsemigroup(enumerate_set(semigroup_id('L', n, k=k)))
        closed = k in (1, n)
        assert is_subsemigroup(enumerate_set(semigroup_id('R', n, k=k))) == closed
        assert is_subsemigroup(enumerate_set(semigroup_id('Z', n, k=k))) == closed


def test_find_closure_violation():
    r2 = enumerate_set(semigroup_id('R', 3, k=2))
    a, b = find_closure_violation(r2)
    assert a in r2 and b in r2
    assert compose(a, b) not in r2
    assert find_closure_violation(ElementStore(3)) is None


def test_undecomposables():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    assert words(undecomposables(r1)) == ['[1,1,2]', '[1,1,3]']


@pytest.mark.parametrize('n', [4, 5, 6, 7])
def test_F_is_undecomposable_in_R1(n):
    mandatory = undecomposables(enumerate_set(semigroup_id('R', n, k=1))).as_set()
    assert set(family('F', n)) <= mandatory


@pytest.mark.parametrize('n', [5, 6, 7])
def test_M_is_undecomposable_in_Z1(n):
    mandatory = undecomposables(enumerate_set(semigroup_id('Z', n, k=1))).as_set()
    assert set(family('M', n)) <= mandatory


def test_undecomposables_of_a_monoid():
    # the identity is 1 * 1 only
    o3 = enumerate_O(3)
    assert identity(3) in undecomposables(o3)
    with pytest.raises(ValueError):
        undecomposables(enumerate_set(semigroup_id('R', 3, k=2)))


def test_kernel_refines_product():
    assert kernel_refines_product(T(1, 1, 2), T(1, 1, 3))
    assert kernel_refines_product(T(1, 2, 3), T(1, 1, 3))


def test_multiplication_table():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    table = MultiplicationTable(r1)
    assert len(table) == 3
    products = table.product_indices()
    for i, a in enumerate(r1):
        for j, b in enumerate(r1):
            assert r1[products[i, j]] == compose(a, b)
    assert table.first_violation() is None
    with pytest.raises(ValueError):
        MultiplicationTable(ElementStore(16, [identity(16)]))
