"""
Claims about generating sets and ranks of the two-sided zero-divisor
semigroups Z_1 and Z_n and of Z_1* = {a in Z_1 : 3a >= 3}.
"""
import logging

import numpy as np

from orderzero.claims.base import (
    BaseClaim,
    GeneratingSetClaim,
    check_generates,
    check_minimal,
    check_rank,
    check_undecomposable,
)
from orderzero.counts import card, rank_formula
from orderzero.engine import MultiplicationTable, closure, undecomposables, verify_isomorphism
from orderzero.enumeration import enumerate_set, layer, semigroup_id
from orderzero.families import (
    closing_factors,
    family,
    gamma,
    mu,
    rho,
    rho_special,
    small_generators,
    tau,
    xi,
    z1_minimal_generators,
)
from orderzero.transformations import (
    dual,
    is_injective_on,
    is_order_decreasing,
    product,
    rank_of,
    shift,
)

logger = logging.getLogger(__name__)


def _h_and_k(n):
    return list(family('H', n)) + list(family('K', n))


class TwoSidedStarGenerators(GeneratingSetClaim):
    """
    H u K is a minimal generating set of Z_1*, and x -> (x+2)a - 2 is an
    isomorphism of Z_1* onto L_1 over the chain of size n - 2 carrying
    H u K onto D_{n-3}(L_1) u E+.
    """
    claim_id = 'COROLLARY_12'
    min_degree = 5

    def default_generators(self, n):
        return _h_and_k(n)

    def check(self, n, params, evidence):
        sid = semigroup_id('Z1_STAR', n)
        star = enumerate_set(sid)
        evidence.expect_equal("|Z_1*|", len(star), card(sid))
        gens = self.generating_set(n)
        check_generates(evidence, 'H u K', gens, star)
        check_minimal(evidence, 'H u K', gens, star)
        evidence.expect_equal_sets("D_{n-2}(Z_1*) = H", layer(star, n - 2), family('H', n))

        m = n - 2
        report = verify_isomorphism(shift, star, enumerate_set(semigroup_id('L', m, k=1)))
        evidence.expect(report.ok, "Z_1* -> L_1 over n-2 points is an isomorphism",
                        report.counterexample, report.reason)
        for i in range(3, n):
            evidence.expect_equal(f"mu_{i} maps to gamma_{i-2}", shift(mu(n, i)), gamma(m, i - 2))
        for i in range(3, n - 1):
            evidence.expect_equal(f"rho_{i} maps to xi_{i-1}", shift(rho(n, i)), xi(m, i - 1))
        evidence.expect_equal_sets(
            "H u K maps onto D_{n-3}(L_1) u E+",
            [shift(g) for g in _h_and_k(n)],
            list(family('D_LAYER_L1', m)) + list(family('E_PLUS', m)),
        )
        check_rank(evidence, 'Z_1*', star, rank_formula(sid), gens, self.budget)


class TwoSidedEndGenerators(GeneratingSetClaim):
    """ H u K u M generates Z_1 """
    claim_id = 'LEMMA_13'
    min_degree = 5

    def default_generators(self, n):
        return _h_and_k(n) + list(family('M', n))

    def check(self, n, params, evidence):
        z1 = enumerate_set(semigroup_id('Z', n, k=1))
        star = enumerate_set(semigroup_id('Z1_STAR', n))
        check_generates(evidence, 'H u K u M', self.generating_set(n), z1)
        for t in _h_and_k(n):
            evidence.expect(t in star, "H u K lies in Z_1*", t)
        for t in family('M', n):
            evidence.expect(t in z1 and t not in star, "M lies in Z_1 \\ Z_1*", t)
        evidence.expect_equal("tau_{n-1} = gamma_1", tau(n, n - 1), gamma(n, 1))
        evidence.record('size', len(z1))


class TwoSidedEndRank(GeneratingSetClaim):
    """
    rank(Z_1) = rank(Z_n) = 2n - 5 with H u M u {rho} a minimal
    generating set (1, 1, 2 for n = 2, 3, 4).
    """
    claim_id = 'THEOREM_14'
    min_degree = 5
    small_degrees = (2, 3, 4)

    def default_generators(self, n):
        return z1_minimal_generators(n)

    def check(self, n, params, evidence):
        z1 = enumerate_set(semigroup_id('Z', n, k=1))
        zn = enumerate_set(semigroup_id('Z', n, k=n))
        special = rho_special(n)
        check_undecomposable(evidence, 'M', family('M', n), z1)
        self._check_injective_factors(n, z1, evidence)

        top = layer(z1, n - 1)
        evidence.expect_equal_sets("D_{n-1}(Z_1) = {tau_{n-1}}", top, [tau(n, n - 1)])

        # everything generated by D_{n-2}(Z_1) and tau_{n-1} is order-decreasing
        lower = list(layer(z1, n - 2)) + [tau(n, n - 1)]
        for t in lower:
            evidence.expect(is_order_decreasing(t), "D_{n-2}(Z_1) u {tau_{n-1}} is order-decreasing", t)
        evidence.expect(special in z1 and not is_order_decreasing(special),
                        "Z_1 has an element that is not order-decreasing", special)
        generated = closure(lower, record_words=False).elements
        evidence.expect(special not in generated,
                        "D_{n-2}(Z_1) u {tau_{n-1}} does not generate Z_1", special)

        for i in range(3, n - 1):
            evidence.expect_equal(f"mu_{i} rho tau_{i} = rho_{i}",
                                  product(mu(n, i), special, tau(n, i)), rho(n, i))

        gens = self.generating_set(n)
        check_generates(evidence, 'H u M u {rho}', gens, z1)
        check_minimal(evidence, 'H u M u {rho}', gens, z1)
        evidence.expect_equal("|H u M u {rho}|", len(set(gens)), 2*n - 5)
        check_rank(evidence, 'Z_1', z1, rank_formula(semigroup_id('Z', n, k=1)), gens, self.budget)

        report = verify_isomorphism(dual, z1, zn)
        evidence.expect(report.ok, "dual map Z_1 -> Z_n is an isomorphism",
                        report.counterexample, report.reason)

    def check_small(self, n, params, evidence):
        z1 = enumerate_set(semigroup_id('Z', n, k=1))
        gens = small_generators('Z1', n)
        check_generates(evidence, 'the stated generating set of Z_1', gens, z1)
        check_rank(evidence, 'Z_1', z1, rank_formula(semigroup_id('Z', n, k=1)), gens, self.budget)

    def _check_injective_factors(self, n, z1, evidence):
        # tau_i is injective on {3..n-1}, so every left factor of it in Z_1 is too
        middle = range(3, n)
        for t in family('M', n):
            evidence.expect(is_injective_on(t, middle), "M is injective on {3..n-1}", t)
        products = MultiplicationTable(z1).product_indices()
        factorizations = 0
        for i in range(3, n - 1):
            left, _ = np.nonzero(products == z1.index(tau(n, i)))
            factorizations += len(left)
            for j in np.unique(left).tolist():
                evidence.expect(is_injective_on(z1[j], middle),
                                "left factors of tau_i are injective on {3..n-1}", z1[j])
        evidence.record('factorizations_of_tau_i', factorizations)


class ClosingFactorization(BaseClaim):
    """
    rho = ab for the two closing maps a, b of Z_1. For n >= 6 both lie in
    D_{n-3}(Z_1) and differ from rho, so rho is decomposable. At n = 5
    the second factor is rho itself and only the product is asserted.
    """
    claim_id = 'FINAL_REMARK'
    min_degree = 5

    def check(self, n, params, evidence):
        z1 = enumerate_set(semigroup_id('Z', n, k=1))
        special = rho_special(n)
        a, b = closing_factors(n)
        evidence.expect_equal("rho = ab", product(a, b), special)
        evidence.expect(a in z1, "the first factor lies in Z_1", a)
        evidence.expect(b in z1, "the second factor lies in Z_1", b)

        mandatory = undecomposables(z1).as_set()
        evidence.record('factors', [a, b])
        evidence.record('image_sizes', [rank_of(a), rank_of(b)])
        evidence.record('second_factor_is_rho', b == special)
        evidence.record('rho_undecomposable', special in mandatory)
        if n >= 6:
            evidence.expect_equal("|Im a|", rank_of(a), n - 3)
            evidence.expect_equal("|Im b|", rank_of(b), n - 3)
            evidence.expect(a != special and b != special, "both factors differ from rho", (a, b))
            evidence.expect(special not in mandatory, "rho is decomposable in Z_1", special)
