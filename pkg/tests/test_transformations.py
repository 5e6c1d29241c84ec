import pickle

import pytest
from hypothesis import given, strategies as st

from orderzero.transformations import (
    DegreeMismatch,
    OrderedPartition,
    Transformation,
    compose,
    constant,
    dual,
    equivalence_closure,
    fix_set,
    from_tabular_form,
    identity,
    image,
    is_injective_on,
    is_order_decreasing,
    is_order_increasing,
    is_order_preserving,
    kernel,
    make_transformation,
    preimage,
    product,
    rank_of,
    shift,
    split_at_fixed_point,
    tabular_form,
)
from orderzero.store import ElementStore
from utils import T


@st.composite
def order_preserving(draw, n=None):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=8))
    images = draw(st.lists(st.integers(min_value=1, max_value=n), min_size=n, max_size=n))
    return Transformation(sorted(images))


@st.composite
def triples(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    return draw(order_preserving(n)), draw(order_preserving(n)), draw(order_preserving(n))


# ============================ values ============================

def test_parse_and_str():
    a = Transformation.parse("[ 1, 1,2 ]")
    assert a == T(1, 1, 2)
    assert str(a) == "[1,1,2]"
    assert repr(a) == "Transformation('[1,1,2]')"


@pytest.mark.parametrize('text', ["", "[]", "[1,,2]", "(1,2)", "[0,1]", "[1,3]", "[a]"])
def test_parse_invalid(text):
    with pytest.raises(ValueError):
        Transformation.parse(text)


def test_out_of_range_images():
    with pytest.raises(ValueError):
        Transformation((1, 4, 2))
    with pytest.raises(ValueError):
        make_transformation(3, (1, 2))


@pytest.mark.parametrize('build', [
    lambda: Transformation((True,)),
    lambda: Transformation((1, True)),
    lambda: Transformation((1.0, 2)),
    lambda: make_transformation(True, (1,)),
    lambda: identity(True),
    lambda: constant(True, 1),
    lambda: constant(3, True),
    lambda: ElementStore(True),
])
def test_bools_are_not_points_or_degrees(build):
    with pytest.raises(ValueError):
        build()


def test_immutable_and_hashable():
    a = T(1, 2, 2)
    with pytest.raises(AttributeError):
        a.images = (1, 1, 1)
    assert {a: 1}[T(1, 2, 2)] == 1
    assert pickle.loads(pickle.dumps(a)) == a


def test_ordering():
    elements = [T(2, 2), T(1, 2, 3), T(1, 1), T(1, 2)]
    assert sorted(elements) == [T(1, 1), T(1, 2), T(2, 2), T(1, 2, 3)]


def test_compose_acts_on_the_right():
    a, b = T(1, 1, 2), T(1, 1, 3)
    # x(ab) = (xa)b
    assert compose(a, b) == T(1, 1, 1)
    assert compose(b, a) == T(1, 1, 2)
    assert a * b == compose(a, b)
    assert product(a, b, a) == compose(compose(a, b), a)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(T(1, 1), T(1, 1, 1))
    assert issubclass(DegreeMismatch, ValueError)


def test_constant_and_identity():
    assert constant(4, 3) == T(3, 3, 3, 3)
    assert identity(3) == T(1, 2, 3)
    with pytest.raises(ValueError):
        constant(3, 4)


def test_image_and_fix():
    a = T(1, 3, 3, 4)
    assert image(a) == (1, 3, 4)
    assert rank_of(a) == 3
    assert fix_set(a) == (1, 3, 4)
    assert preimage(a, 3) == (2, 3)
    assert preimage(a, 2) == ()


@pytest.mark.parametrize(['a', 'preserving', 'decreasing', 'increasing'], [
    (T(1, 1, 2), True, True, False),
    (T(2, 3, 3), True, False, True),
    (T(1, 2, 3), True, True, True),
    (T(2, 1, 3), False, False, False),
])
def test_order_predicates(a, preserving, decreasing, increasing):
    assert is_order_preserving(a) == preserving
    assert is_order_decreasing(a) == decreasing
    assert is_order_increasing(a) == increasing


def test_is_injective_on():
    assert is_injective_on(T(1, 1, 2, 3), [2, 3, 4])
    assert not is_injective_on(T(1, 1, 2, 3), [1, 2])


def test_dual():
    assert dual(T(1, 1, 2)) == T(2, 3, 3)
    assert dual(constant(5, 2)) == constant(5, 4)


# ============================ partitions ============================

def test_kernel_blocks():
    assert kernel(T(1, 1, 4, 4, 5)) == OrderedPartition(5, [[1, 2], [3, 4], [5]])
    assert kernel(T(2, 1, 2)) == OrderedPartition(3, [[2], [1, 3]])


def test_partition_properties():
    p = OrderedPartition(4, [[1, 2], [3], [4]])
    assert p.is_convex and p.is_ordered
    q = OrderedPartition(4, [[1, 3], [2, 4]])
    assert not q.is_convex
    assert not OrderedPartition(3, [[3], [1, 2]]).is_ordered
    assert p.refines(OrderedPartition(4, [[1, 2], [3, 4]]))
    assert not p.refines(q)


@pytest.mark.parametrize('blocks', [[[1], [1, 2]], [[1]], [[1, 2], []], [[1, 2], [4]]])
def test_partition_invalid(blocks):
    with pytest.raises(ValueError):
        OrderedPartition(2, blocks)


def test_equivalence_closure():
    assert equivalence_closure({(1, 2), (2, 3)}, 4) == OrderedPartition(4, [[1, 2, 3], [4]])
    assert equivalence_closure(set(), 2) == OrderedPartition(2, [[1], [2]])


def test_tabular_form():
    tab = tabular_form(T(1, 1, 3, 3, 4))
    assert tab.values == (1, 3, 4)
    assert from_tabular_form(tab) == T(1, 1, 3, 3, 4)
    with pytest.raises(ValueError):
        tabular_form(T(2, 1))


# ============================ isomorphism helpers ============================

def test_shift():
    assert shift(T(1, 1, 4, 4, 5)) == T(2, 2, 3)
    assert shift(T(1, 1, 3, 4, 5)) == identity(3)
    with pytest.raises(ValueError):
        shift(T(1, 1, 2, 4, 5))


def test_split_at_fixed_point():
    assert split_at_fixed_point(T(1, 1, 3, 5, 5), 3) == (T(1, 1), T(2, 2))
    with pytest.raises(ValueError):
        split_at_fixed_point(T(1, 3, 3, 5, 5), 3)
    with pytest.raises(ValueError):
        split_at_fixed_point(T(1, 1, 3, 5, 5), 1)


# ============================ laws ============================

@given(triples())
def test_associativity(abc):
    a, b, c = abc
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(triples())
def test_order_preserving_maps_are_closed(abc):
    a, b, _ = abc
    assert is_order_preserving(compose(a, b))


@given(triples())
def test_dual_is_an_involutive_homomorphism(abc):
    a, b, _ = abc
    assert dual(dual(a)) == a
    assert dual(compose(a, b)) == compose(dual(a), dual(b))
    assert is_order_preserving(dual(a))


@given(order_preserving())
def test_tabular_form_roundtrip(a):
    tab = tabular_form(a)
    assert tab.blocks.is_convex and tab.blocks.is_ordered
    assert from_tabular_form(tab) == a


@given(triples())
def test_products_never_increase_rank(abc):
    a, b, _ = abc
    assert rank_of(compose(a, b)) <= min(rank_of(a), rank_of(b))


@given(order_preserving())
def test_parse_roundtrip(a):
    assert Transformation.parse(str(a)) == a
