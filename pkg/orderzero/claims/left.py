"""
Claims about generating sets and ranks of IO_n, O_n(Y) and the left
zero-divisor semigroups L_k.
"""
import logging

from orderzero import config
from orderzero.claims.base import (
    BaseClaim,
    GeneratingSetClaim,
    check_generates,
    check_minimal,
    check_rank,
)
from orderzero.counts import card, rank_formula
from orderzero.engine import closure
from orderzero.enumeration import (
    captive_set,
    enumerate_set,
    layer,
    semigroup_id,
    without_identity,
)
from orderzero.families import (
    beta,
    family,
    gamma,
    io_generators,
    small_generators,
    xi,
    zeta,
    zeta_prime,
)
from orderzero.transformations import identity, image, product
from orderzero.utils import nonempty_subsets

logger = logging.getLogger(__name__)


class IntervalImageGenerators(GeneratingSetClaim):
    """
    {gamma_1, .., gamma_{n-2}, beta_{n-1}} is a minimal generating set
    of the monoid IO_n and its rank is n - 1: the set generates every
    element except the identity.
    """
    claim_id = 'THEOREM_4'
    min_degree = 3

    def default_generators(self, n):
        return io_generators(n)

    def check(self, n, params, evidence):
        full = enumerate_set(semigroup_id('IO', n))
        evidence.expect_equal("|IO_n|", len(full), card(semigroup_id('IO', n)))
        evidence.expect(identity(n) in full, "IO_n contains the identity", identity(n))
        io = without_identity(full)
        gens = self.generating_set(n)
        check_generates(evidence, "gamma_1..gamma_{n-2}, beta_{n-1}", gens, io)
        check_minimal(evidence, "gamma_1..gamma_{n-2}, beta_{n-1}", gens, io)

        l1 = enumerate_set(semigroup_id('L', n, k=1))
        ln = enumerate_set(semigroup_id('L', n, k=n))
        top_l1, top_ln = layer(l1, n - 1), layer(ln, n - 1)
        evidence.expect_equal_sets("D_{n-1}(L_1) = {gamma_i}", top_l1, family('D_LAYER_L1', n))
        evidence.expect_equal_sets("D_{n-1}(L_n) = {beta_i}", top_ln, family('D_LAYER_LN', n))
        check_generates(evidence, "D_{n-1}(L_1) u D_{n-1}(L_n)", list(top_l1) + list(top_ln), io)

        check_rank(evidence, 'IO_n minus identity', io, rank_formula(semigroup_id('IO', n)), gens, self.budget)
        evidence.record('size', len(full))


class RestrictedRangeRank(BaseClaim):
    """
    rank(O_n(Y)) = C(n-1, |Y|-1) + |Y#| for 1 < |Y| < n, where Y# is the
    set of captive points of Y.

    Every admissible Y is checked up to ``ALL_SUBSETS_MAX_DEGREE``; above
    it only X_{n-1} and {1, n}. A ``y`` parameter selects one set.
    """
    claim_id = 'THEOREM_5'
    min_degree = 3

    def point_sets(self, n, params):
        if params.get('y') is not None:
            return [tuple(sorted(set(params['y'])))]
        if n <= config.ALL_SUBSETS_MAX_DEGREE:
            return list(nonempty_subsets(range(1, n+1), 2, n - 1))
        return [tuple(range(1, n)), (1, n)]

    def check(self, n, params, evidence):
        results = {}
        for y in self.point_sets(n, params):
            sid = semigroup_id('O_Y', n, y=y)
            store = enumerate_set(sid)
            key = ','.join(map(str, sid.y))
            evidence.expect_equal(f"|O_n({{{key}}})|", len(store), card(sid))
            expected = rank_formula(sid)
            cert = check_rank(evidence, f"O_n({{{key}}})", store, expected, budget=self.budget)
            results[key] = {
                'captive': captive_set(sid.y, n),
                'formula': expected,
                'rank': cert.rank,
                'mode': cert.mode,
            }
        evidence.record('point_sets', results)


class LeftEndGenerators(GeneratingSetClaim):
    """
    L_1 = O_n(X_{n-1}); D_{n-1}(L_1) u E+ generates L_1, dually
    D_{n-1}(L_n) u E- generates L_n, and both ranks are 2n - 3.
    """
    claim_id = 'COROLLARY_6'
    min_degree = 3

    def default_generators(self, n):
        return list(family('D_LAYER_L1', n)) + list(family('E_PLUS', n))

    def check(self, n, params, evidence):
        l1 = enumerate_set(semigroup_id('L', n, k=1))
        ln = enumerate_set(semigroup_id('L', n, k=n))
        restricted = enumerate_set(semigroup_id('O_Y', n, y=range(1, n)))
        evidence.expect_equal_sets("L_1 = O_n(X_{n-1})", l1, restricted)
        evidence.expect_equal("captive points of X_{n-1}", captive_set(range(1, n), n),
                              tuple(range(1, n - 1)))

        gens_l1 = self.generating_set(n)
        gens_ln = list(family('D_LAYER_LN', n)) + list(family('E_MINUS', n))
        check_generates(evidence, "D_{n-1}(L_1) u E+", gens_l1, l1)
        check_generates(evidence, "D_{n-1}(L_n) u E-", gens_ln, ln)
        evidence.expect_equal("|D_{n-1}(L_1) u E+|", len(set(gens_l1)), 2*n - 3)

        for k in range(1, n+1):
            lk = enumerate_set(semigroup_id('L', n, k=k))
            if k < n:
                for t in family('E_PLUS', n):
                    evidence.expect(t in lk, f"E+ lies in L_{k}", t)
            if k > 1:
                for t in family('E_MINUS', n):
                    evidence.expect(t in lk, f"E- lies in L_{k}", t)

        expected = rank_formula(semigroup_id('L', n, k=1))
        check_rank(evidence, 'L_1', l1, expected, gens_l1, self.budget)
        check_rank(evidence, 'L_n', ln, expected, gens_ln, self.budget)


class MiddleLeftGenerators(GeneratingSetClaim):
    """
    B = {gamma_1, beta_2, .., beta_{n-1}, xi_3, .., xi_{n-1}} generates
    L_k for every 1 < k < n (these L_k all coincide).
    """
    claim_id = 'LEMMA_7'
    min_degree = 4

    def default_generators(self, n):
        return family('B', n)

    def check(self, n, params, evidence):
        l2 = enumerate_set(semigroup_id('L', n, k=2))
        for k in range(3, n):
            evidence.expect_equal_sets(f"L_{k} = L_2",
                                       enumerate_set(semigroup_id('L', n, k=k)), l2)
        gens = self.generating_set(n)
        check_generates(evidence, 'B', gens, l2)
        evidence.expect_equal("|B|", len(set(gens)), 2*n - 4)

        evidence.expect_equal("beta_1 = gamma_1 beta_{n-1}",
                              beta(n, 1), product(gamma(n, 1), beta(n, n - 1)))
        for i in range(1, n):
            evidence.expect_equal(f"gamma_{i} = beta_{i} gamma_1",
                                  gamma(n, i), product(beta(n, i), gamma(n, 1)))
        evidence.expect_equal("zeta_{n-1} = xi_2", zeta(n, n - 1), xi(n, 2))
        evidence.expect_equal("xi_2 = beta_1 beta_{n-1} gamma_1",
                              xi(n, 2), product(beta(n, 1), beta(n, n - 1), gamma(n, 1)))
        l1 = enumerate_set(semigroup_id('L', n, k=1))
        for i in range(2, n - 1):
            evidence.expect(zeta_prime(n, i) in l1, f"zeta'_{i} lies in L_1", zeta_prime(n, i))
            evidence.expect_equal(f"zeta_{i} = zeta'_{i} beta_{{n-1}}",
                                  zeta(n, i), product(zeta_prime(n, i), beta(n, n - 1)))
        evidence.record('size', len(l2))


class MiddleLeftRank(GeneratingSetClaim):
    """
    rank(L_k) = 2n - 4 for 1 < k < n. For n >= 4 D_{n-1}(L_2) only
    generates IO_n, and D_{n-2}(L_2) splits into U_i, V_i and D_{n-2}(IO_n).
    """
    claim_id = 'THEOREM_8'
    min_degree = 3

    def default_generators(self, n):
        if n == 3:
            return small_generators('L2', 3)
        return family('B', n)

    def check(self, n, params, evidence):
        l2 = enumerate_set(semigroup_id('L', n, k=2))
        io = without_identity(enumerate_set(semigroup_id('IO', n)))
        gens = self.generating_set(n)
        check_generates(evidence, 'the generating set of L_2', gens, l2)

        top = layer(l2, n - 1)
        evidence.expect_equal_sets("D_{n-1}(L_2) = D_{n-1}(IO_n)", top, layer(io, n - 1))
        top_closure = closure(list(top), record_words=False).elements
        evidence.expect_equal_sets("<D_{n-1}(L_2)> = IO_n minus identity", top_closure, io)
        if n == 3:
            # L_2 = IO_3 minus identity, generated by its top layer
            evidence.expect_equal_sets("L_2 = IO_3 minus identity", l2, io)
        else:
            evidence.expect(top_closure.as_set() != l2.as_set(), "<D_{n-1}(L_2)> != L_2",
                            min(l2.as_set() - top_closure.as_set(), default=None))
            self._check_second_layer(n, l2, io, evidence)

        check_rank(evidence, 'L_2', l2, rank_formula(semigroup_id('L', n, k=2)), gens, self.budget)

    def _check_second_layer(self, n, l2, io, evidence):
        points = set(range(1, n+1))
        second = layer(l2, n - 2)
        parts = {}
        for i in range(2, n - 1):
            u_i = {a for a in second if set(image(a)) == points - {i, n}}
            v_i = {a for a in second if set(image(a)) == points - {1, i + 1}}
            parts[i] = (u_i, v_i)
            for a in u_i:
                b = a * beta(n, n - 1)
                evidence.expect(b in v_i, f"U_{i} beta_{{n-1}} lies in V_{i}", a)
                evidence.expect_equal(f"a = a beta_{{n-1}} gamma_1 on U_{i}", b * gamma(n, 1), a)
            for a in v_i:
                b = a * gamma(n, 1)
                evidence.expect(b in u_i, f"V_{i} gamma_1 lies in U_{i}", a)
                evidence.expect_equal(f"a = a gamma_1 beta_{{n-1}} on V_{i}", b * beta(n, n - 1), a)
        union = set(layer(io, n - 2))
        total = len(union)
        for u_i, v_i in parts.values():
            union |= u_i | v_i
            total += len(u_i) + len(v_i)
        evidence.expect_equal_sets("D_{n-2}(L_2) = U u V u D_{n-2}(IO_n)", union, second)
        evidence.expect_equal("the parts of D_{n-2}(L_2) are disjoint", total, len(union))
        evidence.record('second_layer', {
            str(i): {'U': len(u), 'V': len(v)} for i, (u, v) in parts.items()
        })
