"""
Claims about the sizes and the structure of L_k, R_k and Z_k, and about
which of them are closed under composition.
"""
import logging

from orderzero import config
from orderzero.claims.base import BaseClaim
from orderzero.counts import (
    card,
    card_endpoints_and_point,
    card_endpoints_fixed_singleton,
    card_fixed_singleton,
    card_L1_and_Ln,
    card_missing_point,
    card_O,
)
from orderzero.engine import find_closure_violation, verify_isomorphism
from orderzero.enumeration import (
    enumerate_O,
    enumerate_set,
    in_L,
    in_L_definitional,
    in_R,
    in_R_definitional,
    proof_sets,
    semigroup_id,
)
from orderzero.families import left_witness, right_witness
from orderzero.transformations import (
    compose,
    constant,
    dual,
    is_order_preserving,
    split_at_fixed_point,
)

logger = logging.getLogger(__name__)


def _zero_divisors(kind, n):
    return {k: enumerate_set(semigroup_id(kind, n, k=k)) for k in range(1, n+1)}


def _check_duality(evidence, kind, n, sets):
    """ The dual map is an isomorphism from the k=1 set onto the k=n set """
    report = verify_isomorphism(dual, sets[1], sets[n])
    evidence.expect(report.ok, f"dual map {kind}_1 -> {kind}_{n} is an isomorphism",
                    report.counterexample, report.reason)


def _check_definitional(evidence, kind, n, k, all_maps):
    """ The characterization agrees with the existential definition """
    if n > config.definitional_cap():
        return False
    characterized, definitional = {
        'L': (in_L, in_L_definitional),
        'R': (in_R, in_R_definitional),
    }[kind]
    for a in all_maps:
        evidence.expect(characterized(a, k) == definitional(a, k),
                        f"{kind}_{k} characterization matches its definition", a)
    return True


class LeftDivisorStructure(BaseClaim):
    """
    L_1 = {a : n not in Im a}, L_n = {a : 1 not in Im a} and, for
    1 < k < n, L_k = L_1 u L_n; sizes of all three.
    """
    claim_id = 'LEMMA_1'
    min_degree = 2

    def check(self, n, params, evidence):
        all_maps = enumerate_O(n)
        sets = _zero_divisors('L', n)
        counts = {}
        for k, lk in sets.items():
            counts[k] = len(lk)
            evidence.expect_equal(f"|L_{k}|", len(lk), card(semigroup_id('L', n, k=k)))
            definitional = _check_definitional(evidence, 'L', n, k, all_maps)

            pi_k = constant(n, k)
            for a in all_maps:
                w = left_witness(a, k)
                if a in lk:
                    evidence.expect(
                        w is not None and w != pi_k and is_order_preserving(w)
                        and compose(a, w) == pi_k,
                        f"left witness for L_{k} is sound", a)
                else:
                    evidence.expect(w is None, f"no left witness outside L_{k}", a)

        for k in range(2, n):
            evidence.expect_equal_sets(f"L_{k} = L_1 u L_n", sets[k],
                                       sets[1].as_set() | sets[n].as_set())
        both = sets[1].as_set() & sets[n].as_set()
        evidence.expect_equal("|L_1 n L_n|", len(both), card_L1_and_Ln(n))
        _check_duality(evidence, 'L', n, sets)

        evidence.record('counts', counts)
        evidence.record('definitional_agreement_checked', definitional)


class RightDivisorStructure(BaseClaim):
    """
    R_k = {a : k in Im a, k a^{-1} != {k}} and its size; for 1 < k < n
    the complement of R_k splits into A_k (k a^{-1} = {k}) and B_k
    (k not in Im a), and A_k is in bijection with O_{k-1} x O_{n-k}.
    """
    claim_id = 'LEMMA_2'
    min_degree = 2

    def check(self, n, params, evidence):
        all_maps = enumerate_O(n)
        sets = _zero_divisors('R', n)
        counts = {}
        definitional = False
        for k, rk in sets.items():
            counts[k] = len(rk)
            evidence.expect_equal(f"|R_{k}|", len(rk), card(semigroup_id('R', n, k=k)))
            definitional = _check_definitional(evidence, 'R', n, k, all_maps)
            pi_k = constant(n, k)
            for a in all_maps:
                w = right_witness(a, k)
                if a in rk:
                    evidence.expect(
                        w is not None and w != pi_k and compose(w, a) == pi_k,
                        f"right witness for R_{k} is sound", a)
                else:
                    evidence.expect(w is None, f"no right witness outside R_{k}", a)

        proof_counts = {}
        for k in range(2, n):
            ps = proof_sets(n, k)
            a_k, b_k = ps.fixed_singleton.as_set(), ps.missing_point.as_set()
            evidence.expect(not (a_k & b_k), f"A_{k} and B_{k} are disjoint",
                            min(a_k & b_k) if a_k & b_k else None)
            evidence.expect_equal(f"|A_{k}|", len(a_k), card_fixed_singleton(n, k))
            evidence.expect_equal(f"|B_{k}|", len(b_k), card_missing_point(n, k))
            evidence.expect_equal_sets(f"R_{k} = O_n \\ (A_{k} u B_{k})", sets[k],
                                       all_maps.as_set() - a_k - b_k)

            pieces = {split_at_fixed_point(a, k) for a in a_k}
            evidence.expect_equal(f"A_{k} -> O_{k-1} x O_{n-k} is injective",
                                  len(pieces), len(a_k))
            evidence.expect_equal(f"|O_{k-1} x O_{n-k}|", len(a_k),
                                  card_O(k - 1) * card_O(n - k))
            for left, right in pieces:
                evidence.expect(is_order_preserving(left) and is_order_preserving(right),
                                f"A_{k} splits into order-preserving parts", (left, right))
            proof_counts[k] = {'A': len(a_k), 'B': len(b_k)}

        _check_duality(evidence, 'R', n, sets)
        evidence.record('counts', counts)
        evidence.record('proof_set_counts', proof_counts)
        evidence.record('definitional_agreement_checked', definitional)


class TwoSidedDivisorStructure(BaseClaim):
    """
    Z_k = L_k n R_k, its size, and the counting argument for 1 < k < n:
    R_k \\ Z_k = B \\ C where B = {a : 1, k, n in Im a} and C is the part
    of B with k a^{-1} = {k}.
    """
    claim_id = 'LEMMA_3'
    min_degree = 2

    def check(self, n, params, evidence):
        lsets = _zero_divisors('L', n)
        rsets = _zero_divisors('R', n)
        zsets = _zero_divisors('Z', n)
        counts = {}
        for k, zk in zsets.items():
            counts[k] = len(zk)
            evidence.expect_equal_sets(f"Z_{k} = L_{k} n R_{k}", zk,
                                       lsets[k].as_set() & rsets[k].as_set())
            evidence.expect_equal(f"|Z_{k}|", len(zk), card(semigroup_id('Z', n, k=k)))

        if n == 2:
            evidence.expect_equal_sets("Z_1 = R_1 for n = 2", zsets[1], rsets[1])
            evidence.expect_equal_sets("Z_2 = R_2 for n = 2", zsets[2], rsets[2])
        if n == 3:
            evidence.expect_equal_sets("Z_2 = R_2 for n = 3", zsets[2], rsets[2])

        proof_counts = {}
        for k in range(2, n):
            ps = proof_sets(n, k)
            b = ps.endpoints_and_point.as_set()
            c = ps.endpoints_fixed_singleton.as_set()
            a = rsets[k].as_set() - zsets[k].as_set()
            evidence.expect_equal_sets(f"R_{k} \\ Z_{k} = B \\ C", a, b - c)
            evidence.expect_equal_sets(f"Z_{k} = R_{k} \\ A", zsets[k], rsets[k].as_set() - a)
            evidence.expect_equal("|B|", len(b), card_endpoints_and_point(n, k))
            evidence.expect_equal("|C|", len(c), card_endpoints_fixed_singleton(n, k))

            # C -> D x E with D = {a in O_{k-1} : 1a = 1}, E = {a in O_{n-k} : (n-k)a = n-k}
            pieces = {split_at_fixed_point(t, k) for t in c}
            evidence.expect_equal("C -> D x E is injective", len(pieces), len(c))
            for left, right in pieces:
                evidence.expect(left(1) == 1 and right(right.degree) == right.degree,
                                "C splits into D x E", (left, right))
            d_size = len(enumerate_O(k - 1).filter(lambda t: t(1) == 1))
            e_size = len(enumerate_O(n - k).filter(lambda t: t(t.degree) == t.degree))
            evidence.expect_equal("|C| = |D| |E|", len(c), d_size * e_size)
            proof_counts[k] = {'A': len(a), 'B': len(b), 'C': len(c)}

        _check_duality(evidence, 'Z', n, zsets)
        evidence.record('counts', counts)
        evidence.record('proof_set_counts', proof_counts)


class SubsemigroupLaw(BaseClaim):
    """ L_k is always closed; R_k and Z_k are closed iff k is 1 or n """
    claim_id = 'SUBSEMIGROUP_IFF'
    min_degree = 2

    def check(self, n, params, evidence):
        closed = {}
        for kind in ('L', 'R', 'Z'):
            for k in range(1, n+1):
                store = enumerate_set(semigroup_id(kind, n, k=k))
                violation = find_closure_violation(store)
                should_close = kind == 'L' or k in (1, n)
                closed[f"{kind}_{k}"] = violation is None
                if should_close:
                    evidence.expect(violation is None, f"{kind}_{k} is closed", violation)
                else:
                    evidence.expect(violation is not None, f"{kind}_{k} is not closed",
                                    min(store, default=None))
                    if violation is not None:
                        evidence.record(f"{kind}_{k} violation", violation)
        evidence.record('closed', closed)
