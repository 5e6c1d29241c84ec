import pytest

from orderzero.engine import verify_isomorphism
from orderzero.enumeration import enumerate_O, enumerate_set, semigroup_id
from orderzero.transformations import dual, identity, shift
from utils import T


@pytest.mark.parametrize(['kind', 'n'], [('L', 3), ('L', 5), ('R', 4), ('Z', 5)])
def test_dual_is_an_isomorphism(kind, n):
    report = verify_isomorphism(dual, enumerate_set(semigroup_id(kind, n, k=1)),
                                enumerate_set(semigroup_id(kind, n, k=n)))
    assert report
    assert report.ok and report.counterexample is None


@pytest.mark.parametrize('n', [4, 5, 6])
def test_shift_of_R1_star(n):
    report = verify_isomorphism(shift, enumerate_set(semigroup_id('R1_STAR', n)),
                                enumerate_O(n - 2))
    assert report.ok, report.reason


@pytest.mark.parametrize('n', [5, 6])
def test_shift_of_Z1_star(n):
    report = verify_isomorphism(shift, enumerate_set(semigroup_id('Z1_STAR', n)),
                                enumerate_set(semigroup_id('L', n - 2, k=1)))
    assert report.ok, report.reason


def test_size_mismatch():
    report = verify_isomorphism(dual, enumerate_O(3), enumerate_set(semigroup_id('L', 3, k=3)))
    assert not report
    assert 'sizes differ' in report.reason


def test_map_leaving_the_target():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    report = verify_isomorphism(lambda t: t, r1, enumerate_set(semigroup_id('R', 3, k=3)))
    assert not report.ok
    assert report.counterexample == (T(1, 1, 1),)


def test_non_injective_map():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    report = verify_isomorphism(lambda t: T(1, 1, 1), r1, r1)
    assert not report.ok
    assert report.counterexample == (T(1, 1, 1), T(1, 1, 2))


def test_bijection_that_breaks_products():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    swap = {T(1, 1, 1): T(1, 1, 2), T(1, 1, 2): T(1, 1, 1), T(1, 1, 3): T(1, 1, 3)}
    report = verify_isomorphism(swap, r1, r1)
    assert not report.ok
    assert 'product' in report.reason
    assert len(report.counterexample) == 2


def test_identity_map_and_partial_mapping():
    r1 = enumerate_set(semigroup_id('R', 3, k=1))
    assert verify_isomorphism(lambda t: t, r1, r1)
    report = verify_isomorphism({T(1, 1, 1): T(1, 1, 1)}, r1, r1)
    assert not report.ok
    assert 'undefined' in report.reason
    assert identity(3) not in r1
