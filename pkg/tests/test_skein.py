import random

import pytest

from linkperiod import skein
from linkperiod.diagram import BraidWord, parse_pd, pd_from_braid
from linkperiod.laurent import BiLaurent, LaurentPoly
from linkperiod.selftest import (FIG8_HOMFLY, FIGURE_EIGHT, HOPF, HOPF_HOMFLY,
                                 HOPF_Q2, TREFOIL, TREFOIL_HOMFLY, TREFOIL_Q2,
                                 TREFOIL_Q3)

UNKNOT = BraidWord(1)


class TestHomfly:
    def test_unknot(self):
        assert skein.homfly(UNKNOT) == BiLaurent.one()

    def test_two_unlink(self):
        assert skein.homfly(BraidWord(2)) == skein.DELTA

    def test_trefoil(self):
        assert skein.homfly(TREFOIL) == TREFOIL_HOMFLY

    def test_mirror_trefoil(self):
        mirror = skein.homfly(BraidWord(2, (-1, -1, -1)))
        # Mirroring inverts a.
        assert mirror == BiLaurent({(-2, 0): 2, (-4, 0): -1, (-2, 2): 1})

    def test_hopf(self):
        assert skein.homfly(HOPF) == HOPF_HOMFLY

    def test_figure_eight(self):
        assert skein.homfly(FIGURE_EIGHT) == FIG8_HOMFLY

    def test_pd_input(self):
        d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        assert skein.homfly(d) == TREFOIL_HOMFLY

    def test_reidemeister_invariance_samples(self):
        # sigma1 sigma1^-1 closes to the 2-unlink, sigma1 sigma2 sigma1 =
        # sigma2 sigma1 sigma2 (braid relation) closes to the same link.
        assert skein.homfly(BraidWord(2, (1, -1))) == skein.DELTA
        assert skein.homfly(BraidWord(3, (1, 2, 1))) == \
            skein.homfly(BraidWord(3, (2, 1, 2)))

    def test_distant_unknot_multiplies_delta(self):
        rng = random.Random(41)
        for _ in range(10):
            letters = tuple(rng.choice((1, -1)) for _ in range(rng.randint(0, 4)))
            inner = BraidWord(2, letters)
            padded = BraidWord(3, letters)  # strand 3 untouched
            assert skein.homfly(padded) == skein.homfly(inner) * skein.DELTA

    def test_crossing_limit(self):
        with pytest.raises(skein.ResourceLimitError):
            skein.homfly(BraidWord(2, (1,) * 5), max_crossings=4)

    def test_skein_relation_random(self):
        # a^-1 P(L+) - a P(L-) = z P(L0) at a random positive-crossing site.
        rng = random.Random(43)
        a_inv = BiLaurent.monomial(-1, 0)
        a_pos = BiLaurent.monomial(1, 0)
        z = BiLaurent.monomial(0, 1)
        for _ in range(20):
            letters = [rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 6))]
            i = rng.randrange(len(letters))
            j = abs(letters[i])
            plus = list(letters)
            plus[i] = j
            minus = list(letters)
            minus[i] = -j
            zero = letters[:i] + letters[i + 1:]
            Pp = skein.homfly(BraidWord(3, tuple(plus)))
            Pm = skein.homfly(BraidWord(3, tuple(minus)))
            P0 = skein.homfly(BraidWord(3, tuple(zero)))
            assert a_inv * Pp - a_pos * Pm == z * P0


class TestQuantumSln:
    def test_unknot_all_n(self):
        one = skein.homfly(UNKNOT)
        for N in range(2, 6):
            inv = skein.quantum_sln(one, N)
            assert inv == LaurentPoly(
                {e: 1 for e in range(-N + 1, N, 2)})

    def test_trefoil_fixtures(self):
        P = skein.homfly(TREFOIL)
        assert skein.quantum_sln(P, 2) == TREFOIL_Q2
        assert skein.quantum_sln(P, 3) == TREFOIL_Q3

    def test_hopf_n2(self):
        assert skein.quantum_sln(skein.homfly(HOPF), 2, m=2) == HOPF_Q2

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            skein.quantum_sln(TREFOIL_HOMFLY, 1)

    def test_component_mismatch(self):
        # Hopf polynomial has z-exponent -1; claiming a knot must fail.
        with pytest.raises(ValueError):
            skein.quantum_sln(HOPF_HOMFLY, 2, m=1)


class TestJones:
    def test_trefoil(self):
        V = skein.jones(TREFOIL_HOMFLY)
        assert V.var == "t"
        assert V == LaurentPoly({1: 1, 3: 1, 4: -1}, "t")

    def test_figure_eight(self):
        V = skein.jones(FIG8_HOMFLY)
        assert V == LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}, "t")

    def test_unknot(self):
        assert skein.jones(BiLaurent.one()) == LaurentPoly({0: 1}, "t")

    def test_hopf_reported_in_s(self):
        V = skein.jones(HOPF_HOMFLY)
        assert V.var == "s"
        assert all(e % 2 == 1 for e in V.exponents())

    def test_sl2_bridge(self):
        # [2]_q * V(q^-2) equals the N=2 quantum invariant for knots.
        from linkperiod.diagram import closure_components
        rng = random.Random(47)
        bracket2 = LaurentPoly({1: 1, -1: 1})
        found = 0
        while found < 10:
            letters = tuple(rng.choice((1, -1, 2, -2))
                            for _ in range(rng.randint(0, 6)))
            b = BraidWord(3, letters)
            if len(closure_components(b)) != 1:
                continue
            found += 1
            P = skein.homfly(b)
            V = skein.jones(P)
            assert V.var == "t"
            vq = LaurentPoly({-2 * e: c for e, c in V.terms()})
            assert bracket2 * vq == skein.quantum_sln(P, 2)


class TestAlexander:
    def test_trefoil(self):
        assert skein.alexander(TREFOIL_HOMFLY) == \
            LaurentPoly({2: 1, 1: -1, 0: 1}, "t")

    def test_figure_eight(self):
        assert skein.alexander(FIG8_HOMFLY) == \
            LaurentPoly({2: 1, 1: -3, 0: 1}, "t")

    def test_unknot(self):
        assert skein.alexander(BiLaurent.one()) == LaurentPoly({0: 1}, "t")

    def test_rejects_links(self):
        with pytest.raises(ValueError):
            skein.alexander(HOPF_HOMFLY)


class TestP0:
    def test_trefoil(self):
        assert skein.p0_part(TREFOIL_HOMFLY) == LaurentPoly({2: 2, 4: -1}, "a")

    def test_figure_eight(self):
        assert skein.p0_part(FIG8_HOMFLY) == \
            LaurentPoly({-2: 1, 0: -1, 2: 1}, "a")

    def test_evaluates_to_one_at_a_1(self):
        # P0(1) = 1 for every knot: check on random 3-braid knots.
        rng = random.Random(53)
        from linkperiod.diagram import closure_components
        found = 0
        while found < 10:
            letters = tuple(rng.choice((1, -1, 2, -2))
                            for _ in range(rng.randint(1, 6)))
            b = BraidWord(3, letters)
            if len(closure_components(b)) != 1:
                continue
            found += 1
            p0 = skein.p0_part(skein.homfly(b))
            assert sum(c for _, c in p0.terms()) == 1


def test_cache_reuse_is_consistent():
    skein.clear_cache()
    first = skein.homfly(TREFOIL)
    second = skein.homfly(TREFOIL)
    assert first == second == TREFOIL_HOMFLY
