"""
Claims about generating sets and ranks of the right zero-divisor
semigroups R_1 and R_n and of R_1* = {a in R_1 : 3a >= 3}.
"""
import logging

from orderzero.claims.base import (
    GeneratingSetClaim,
    check_generates,
    check_minimal,
    check_rank,
    check_undecomposable,
)
from orderzero.counts import card, rank_formula
from orderzero.engine import closure, extend_closure, kernel_refines_product, verify_isomorphism
from orderzero.enumeration import enumerate_O, enumerate_set, layer, semigroup_id
from orderzero.families import (
    delta,
    family,
    family_G,
    lambda_,
    r1_star_generators,
    small_generators,
    theta,
)
from orderzero.transformations import (
    dual,
    equivalence_closure,
    identity,
    kernel,
    product,
    shift,
)

logger = logging.getLogger(__name__)


def _c_and_f(n):
    return list(family('C', n)) + list(family('F', n))


class RightStarGenerators(GeneratingSetClaim):
    """
    C u {lambda_2, delta_3 lambda_n} is a minimal generating set of R_1*,
    and x -> (x+2)a - 2 is an isomorphism of R_1* onto O_{n-2} carrying
    this set onto G_{n-2}.
    """
    claim_id = 'PROP_9'
    min_degree = 4

    def default_generators(self, n):
        return r1_star_generators(n)

    def check(self, n, params, evidence):
        sid = semigroup_id('R1_STAR', n)
        star = enumerate_set(sid)
        evidence.expect_equal("|R_1*|", len(star), card(sid))
        gens = self.generating_set(n)
        check_generates(evidence, "C u {lambda_2, delta_3 lambda_n}", gens, star)
        check_minimal(evidence, "C u {lambda_2, delta_3 lambda_n}", gens, star)

        m = n - 2
        report = verify_isomorphism(shift, star, enumerate_O(m))
        evidence.expect(report.ok, "R_1* -> O_{n-2} is an isomorphism",
                        report.counterexample, report.reason)

        for i in range(3, n):
            evidence.expect_equal(f"delta_{i} maps to theta_{i-2}",
                                  shift(delta(n, i)), theta(m, i - 2))
        evidence.expect_equal("lambda_2 maps to the identity", shift(lambda_(n, 2)), identity(m))
        evidence.expect_equal("delta_3 lambda_n maps to lambda_{n-2}",
                              shift(product(delta(n, 3), lambda_(n, n))), lambda_(m, m))
        evidence.expect_equal_sets("the generators map onto G_{n-2}",
                                   [shift(g) for g in r1_star_generators(n)], family_G(m))

        check_rank(evidence, 'R_1*', star, rank_formula(sid), gens, self.budget)


class RightEndGenerators(GeneratingSetClaim):
    """ C u F generates R_1, F = D_{n-1}(R_1), and F alone does not """
    claim_id = 'LEMMA_10'
    min_degree = 4

    def default_generators(self, n):
        return _c_and_f(n)

    def check(self, n, params, evidence):
        r1 = enumerate_set(semigroup_id('R', n, k=1))
        check_generates(evidence, 'C u F', self.generating_set(n), r1)
        f = family('F', n)
        evidence.expect_equal_sets("F = D_{n-1}(R_1)", f, layer(r1, n - 1))
        generated = closure(list(f), record_words=False).elements.as_set()
        missing = r1.as_set() - generated
        evidence.expect(bool(missing), "F alone does not generate R_1", min(f))
        evidence.record('missed_by_F', len(missing))
        extra = [g for g in self.generating_set(n) if g not in generated]
        evidence.expect_equal_sets("<F> extended by C is R_1",
                                   extend_closure(generated, list(f), extra), r1)


class RightEndRank(GeneratingSetClaim):
    """
    rank(R_1) = rank(R_n) = 2n - 4 (2 at n = 3): the elements of F are
    undecomposable, and each kernel of a delta_i needs a generator of
    its own outside F.
    """
    claim_id = 'THEOREM_11'
    min_degree = 3
    small_degrees = (2,)

    def default_generators(self, n):
        return _c_and_f(n)

    def check(self, n, params, evidence):
        r1 = enumerate_set(semigroup_id('R', n, k=1))
        rn = enumerate_set(semigroup_id('R', n, k=n))
        f = set(family('F', n))
        check_undecomposable(evidence, 'F', sorted(f), r1)

        gens = self.generating_set(n)
        check_generates(evidence, 'C u F', gens, r1)
        cert = check_rank(evidence, 'R_1', r1, rank_formula(semigroup_id('R', n, k=1)),
                          gens, self.budget)

        kernels = {}
        for i in range(3, n):
            expected = equivalence_closure({(1, 2), (i, i + 1)}, n)
            evidence.expect_equal(f"kernel of delta_{i}", kernel(delta(n, i)), expected)
            for name, chosen in (('C u F', gens), ('rank witness', cert.witness)):
                hits = [t for t in chosen if t not in f and kernel(t) == expected]
                evidence.expect(bool(hits), f"{name} has an element outside F with the kernel of delta_{i}",
                                delta(n, i))
            kernels[i] = [list(block) for block in expected]
        evidence.record('delta_kernels', kernels)

        # a product never has a finer kernel than its left factor
        if n <= 4:
            lefts = rights = list(enumerate_O(n))
        else:
            lefts, rights = list(gens), list(r1)
        bad = next(((b, c) for b in lefts for c in rights if not kernel_refines_product(b, c)), None)
        evidence.expect(bad is None, "ker(b) lies inside ker(bc)", bad)
        evidence.record('kernel_pairs', len(lefts) * len(rights))

        report = verify_isomorphism(dual, r1, rn)
        evidence.expect(report.ok, "dual map R_1 -> R_n is an isomorphism",
                        report.counterexample, report.reason)

    def check_small(self, n, params, evidence):
        r1 = enumerate_set(semigroup_id('R', n, k=1))
        gens = small_generators('R1', n)
        check_generates(evidence, 'the stated generating set of R_1', gens, r1)
        check_rank(evidence, 'R_1', r1, rank_formula(semigroup_id('R', n, k=1)), gens, self.budget)
