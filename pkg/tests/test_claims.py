import pytest

from orderzero import config
from orderzero.claims import CLAIM_CLASSES, claim_units
from orderzero.claims.base import Evidence
from orderzero.claims.left import LeftEndGenerators, MiddleLeftGenerators, RestrictedRangeRank
from orderzero.claims.right import RightEndGenerators, RightStarGenerators
from orderzero.claims.two_sided import TwoSidedEndRank
from orderzero.families import family, r1_star_generators, tau, z1_minimal_generators
from orderzero.transformations import compose, is_injective_on
from orderzero.verifier import Verifier
from utils import T, assert_report_passes


def test_registry_matches_default_order():
    assert list(CLAIM_CLASSES) == config.DEFAULT_CLAIMS
    units = claim_units(config.DEFAULT_CLAIMS)
    assert [u.claim_id for u in units] == config.DEFAULT_CLAIMS
    with pytest.raises(ValueError):
        claim_units(['LEMMA_99'])


@pytest.mark.parametrize('claim_id', config.DEFAULT_CLAIMS)
@pytest.mark.parametrize('n', [5, 6])
def test_claims_hold(verifier, claim_id, n):
    assert_report_passes(verifier.verify(claim_id, n))


@pytest.mark.slow
@pytest.mark.parametrize('claim_id', config.DEFAULT_CLAIMS)
def test_claims_hold_n7(verifier, claim_id):
    assert_report_passes(verifier.verify(claim_id, 7))


@pytest.mark.parametrize(['claim_id', 'degrees'], [
    ('LEMMA_1', [2, 3, 4]),
    ('LEMMA_2', [2, 3, 4]),
    ('LEMMA_3', [2, 3, 4]),
    ('SUBSEMIGROUP_IFF', [2, 3, 4]),
    ('THEOREM_4', [3, 4]),
    ('THEOREM_5', [3, 4]),
    ('COROLLARY_6', [3, 4]),
    ('LEMMA_7', [4]),
    ('THEOREM_8', [3, 4]),
    ('PROP_9', [4]),
    ('LEMMA_10', [4]),
    ('THEOREM_11', [3, 4]),
])
def test_claims_hold_at_small_degrees(verifier, claim_id, degrees):
    for n in degrees:
        assert_report_passes(verifier.verify(claim_id, n))


@pytest.mark.parametrize(['claim_id', 'n'], [
    ('THEOREM_11', 2),
    ('THEOREM_14', 2),
    ('THEOREM_14', 3),
    ('THEOREM_14', 4),
])
def test_small_degree_values(verifier, claim_id, n):
    report = verifier.verify(claim_id, n)
    assert report.status == 'skipped'
    assert_report_passes(verifier.verify(claim_id, n, {'small_n': True}))


@pytest.mark.parametrize(['claim_id', 'n', 'reason'], [
    ('THEOREM_4', 2, 'n >= 3 required'),
    ('LEMMA_7', 3, 'n >= 4 required'),
    ('COROLLARY_12', 4, 'n >= 5 required'),
    ('FINAL_REMARK', 4, 'n >= 5 required'),
])
def test_claims_skip_below_their_range(verifier, claim_id, n, reason):
    report = verifier.verify(claim_id, n, {'small_n': True})
    assert report.status == 'skipped'
    assert report.reason == reason
    assert report.ok


def test_rank_evidence_is_recorded(verifier):
    report = verifier.verify('THEOREM_14', 5)
    rank = report.evidence['values']['rank(Z_1)']
    assert rank['mode'] == 'exact'
    assert rank['rank'] == 5
    assert rank['lower_bound'] == rank['upper_bound'] == 5


def test_rank_evidence_in_bounds_mode(verifier):
    report = verifier.verify('LEMMA_7', 6)
    assert_report_passes(report)
    report = verifier.verify('THEOREM_8', 6)
    rank = report.evidence['values']['rank(L_2)']
    assert rank['mode'] == 'bounds'
    assert rank['upper_bound'] == 8
    assert rank['lower_bound'] <= 8


def test_left_factors_of_tau_are_injective(verifier, sets):
    z1 = sets('Z', 5, 1)
    tau_3 = tau(5, 3)
    pairs = [(a, b) for a in z1 for b in z1 if compose(a, b) == tau_3]
    assert all(is_injective_on(a, [3, 4]) for a, _ in pairs)

    report = verifier.verify('THEOREM_14', 5)
    assert_report_passes(report)
    assert report.evidence['values']['factorizations_of_tau_i'] == len(pairs)


def test_kernel_containment_is_checked(verifier):
    report = verifier.verify('THEOREM_11', 4)
    assert_report_passes(report)
    assert report.evidence['values']['kernel_pairs'] == 35 * 35
    # C u F against R_1 above n = 4
    report = verifier.verify('THEOREM_11', 5)
    assert report.evidence['values']['kernel_pairs'] == 6 * 35


def test_final_remark_degenerates_at_n5(verifier):
    values = verifier.verify('FINAL_REMARK', 5).evidence['values']
    assert values['second_factor_is_rho'] is True
    values = verifier.verify('FINAL_REMARK', 6).evidence['values']
    assert values['second_factor_is_rho'] is False
    assert values['rho_undecomposable'] is False
    assert values['image_sizes'] == [3, 3]


def test_restricted_range_point_set_parameter(verifier):
    report = verifier.verify('THEOREM_5', 6, {'y': (2, 3, 5)})
    assert_report_passes(report)
    assert list(report.evidence['values']['point_sets']) == ['2,3,5']
    point_sets = RestrictedRangeRank().point_sets(4, {})
    assert len(point_sets) == 6 + 4
    assert RestrictedRangeRank().point_sets(7, {}) == [(1, 2, 3, 4, 5, 6), (1, 7)]


# ============================ negative controls ============================

def _verify_with(unit, n):
    return Verifier(claims=[unit]).verify(unit.claim_id, n)


def _failed_checks(report):
    return {f['check'] for f in report.evidence['failures']}


def test_missing_generator_is_detected():
    unit = LeftEndGenerators(generators=lambda n: list(family('D_LAYER_L1', n)))
    report = _verify_with(unit, 4)
    assert report.status == 'fail'
    assert "<D_{n-1}(L_1) u E+> is the target set" in _failed_checks(report)
    assert not report.ok


def test_truncated_family_is_detected():
    def truncated(n):
        return list(family('B', n))[:-1]

    report = _verify_with(MiddleLeftGenerators(generators=truncated), 5)
    assert report.status == 'fail'
    assert {"<B> is the target set", "|B|"} <= _failed_checks(report)
    failure = [f for f in report.evidence['failures'] if f['check'] == "<B> is the target set"]
    assert failure[0]['counterexample'] is not None


def test_redundant_generator_is_detected():
    def padded(n):
        return list(r1_star_generators(n)) + [T(1, 1, 1, 1, 1)]

    report = _verify_with(RightStarGenerators(generators=padded), 5)
    assert report.status == 'fail'
    failure = [f for f in report.evidence['failures']
               if f['check'].endswith('without one element no longer generates')]
    assert failure and failure[0]['counterexample'] == '[1,1,1,1,1]'


def test_incomplete_extension_of_F_is_detected():
    def partial_c(n):
        return list(family('C', n))[1:] + list(family('F', n))

    report = _verify_with(RightEndGenerators(generators=partial_c), 5)
    assert report.status == 'fail'
    assert {"<C u F> is the target set", "<F> extended by C is R_1"} <= _failed_checks(report)
    assert "F alone does not generate R_1" not in _failed_checks(report)


def test_minimal_set_without_rho_is_detected():
    def without_rho(n):
        return list(z1_minimal_generators(n))[:-1]

    report = _verify_with(TwoSidedEndRank(generators=without_rho), 6)
    assert report.status == 'fail'
    assert "<H u M u {rho}> is the target set" in _failed_checks(report)


# ============================ units ============================

def test_unit_repr_and_clone():
    unit = LeftEndGenerators(generators=len)
    assert repr(unit) == "LeftEndGenerators(generators=<...>)"
    clone = unit.clone()
    assert clone is not unit and clone.generators is len
    assert repr(RestrictedRangeRank()) == "RestrictedRangeRank()"


def test_evidence():
    evidence = Evidence()
    assert evidence.expect_equal("sizes", 3, 3)
    assert not evidence.expect_equal_sets("sets", [T(1, 1)], [T(1, 1), T(1, 2)])
    assert not evidence.expect(False, "flag", T(2, 2), "detail")
    evidence.record('count', {1: T(1, 2)})
    doc = evidence.to_json()
    assert doc['checks'] == 3
    assert doc['values'] == {'count': {'1': '[1,2]'}}
    assert doc['failures'] == [
        {'check': 'sets', 'counterexample': '[1,2]', 'detail': '1 missing element(s)'},
        {'check': 'flag', 'counterexample': '[2,2]', 'detail': 'detail'},
    ]
    assert not evidence.ok
