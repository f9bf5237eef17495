import random

import pytest

from linkperiod.laurent import (IdealVariant, InexactDivisionError, LaurentPoly,
                                congruent, exact_divide, parity_split,
                                quantum_integer, reduce)

Q = LaurentPoly.monomial


def P(**kw):
    """Shorthand: P(e3=2, em1=-1) -> 2q^3 - q^-1."""
    return LaurentPoly({int(k[1:].replace("m", "-")): v for k, v in kw.items()})


class TestReduce:
    def test_qp_minus_folds_trefoil_invariant(self):
        f = LaurentPoly({-1: 1, -3: 1, -5: 1, -9: -1})
        form = reduce(f, 3, IdealVariant.QP_MINUS)
        assert dict(form.terms()) == {-1: 1, 1: 1}

    def test_qp_power_is_one(self):
        for p in (3, 5, 7, 11):
            form = reduce(Q(p), p, IdealVariant.QP_MINUS)
            assert dict(form.terms()) == {0: 1}

    def test_qp_plus_power_is_minus_one(self):
        for p in (3, 5, 7):
            form = reduce(Q(p), p, IdealVariant.QP_PLUS)
            assert dict(form.terms()) == {0: p - 1}

    def test_q2p_window(self):
        form = reduce(Q(7) + Q(-7), 5, IdealVariant.Q2P_MINUS)
        assert dict(form.terms()) == {-3: 1, 3: 1}

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            reduce(Q(1), 9, IdealVariant.QP_MINUS)
        with pytest.raises(ValueError):
            reduce(Q(1), 4, IdealVariant.QP_MINUS)
        with pytest.raises(ValueError):
            reduce(Q(1), 2, IdealVariant.QP_PLUS)

    def test_p2_allowed_for_qp_minus(self):
        form = reduce(Q(3) + Q(1), 2, IdealVariant.QP_MINUS)
        assert form.is_zero()


class TestCongruent:
    def test_reflexive(self):
        f = LaurentPoly({5: 3, -2: 1})
        assert congruent(f, f, 7, IdealVariant.QP_MINUS)

    def test_difference_p(self):
        assert congruent(Q(1), Q(1) + LaurentPoly({0: 1}), 5,
                         IdealVariant.QP_MINUS) is False
        assert congruent(Q(1), Q(1) + LaurentPoly({1: 5}), 5,
                         IdealVariant.QP_MINUS)

    def test_trefoil_against_candidate(self):
        trefoil = LaurentPoly({-1: 1, -3: 1, -5: 1, -9: -1})
        assert congruent(trefoil, Q(2) + Q(-2), 3, IdealVariant.QP_MINUS)


class TestExponentFolding:
    """Random exponent pairs congruent mod p reduce identically."""

    def test_lemma_random(self):
        rng = random.Random(7)
        for _ in range(200):
            p = rng.choice((3, 5, 7, 11))
            i = rng.randint(-100, 100)
            j = i + p * rng.randint(-10, 10)
            assert reduce(Q(i), p, IdealVariant.QP_MINUS) == \
                reduce(Q(j), p, IdealVariant.QP_MINUS)


def _random_poly(rng, parity=None):
    c = {}
    for _ in range(rng.randint(0, 6)):
        e = rng.randint(-10, 10)
        if parity is not None:
            e = 2 * e + (1 if parity == "odd" else 0)
        c[e] = rng.randint(-9, 9)
    return LaurentPoly(c)


class TestIdealImplications:
    def test_parity_homogeneous_membership_transfers(self):
        # A parity-homogeneous member of (p, q^p - 1) also lies in
        # (p, q^p + 1) and (p, q^2p - 1).  Members are generated as
        # (q^p - 1) g + p h with parity-homogeneous g, h and then split
        # into parity parts; homogeneous parts that still reduce to zero
        # under QP_MINUS must vanish under the other two ideals too.
        rng = random.Random(11)
        hits = 0
        for _ in range(300):
            p = rng.choice((3, 5, 7))
            par = rng.choice(("even", "odd"))
            g = _random_poly(rng, par)
            h = _random_poly(rng, par)
            f = (Q(p) - Q(0)) * g + h.scale(p)
            for part in parity_split(f):
                if part.is_zero():
                    continue
                if reduce(part, p, IdealVariant.QP_MINUS).is_zero():
                    hits += 1
                    assert reduce(part, p, IdealVariant.QP_PLUS).is_zero()
                    assert reduce(part, p, IdealVariant.Q2P_MINUS).is_zero()
        assert hits > 0

    def test_joint_membership_gives_q2p(self):
        rng = random.Random(13)
        for _ in range(300):
            p = rng.choice((3, 5))
            f = _random_poly(rng)
            zm = reduce(f, p, IdealVariant.QP_MINUS).is_zero()
            zp = reduce(f, p, IdealVariant.QP_PLUS).is_zero()
            if zm and zp:
                assert reduce(f, p, IdealVariant.Q2P_MINUS).is_zero()

    def test_canonicity_under_ideal_shifts(self):
        rng = random.Random(17)
        for _ in range(100):
            p = rng.choice((3, 5, 7))
            f = _random_poly(rng)
            g = _random_poly(rng)
            h = _random_poly(rng)
            shifted = f + (Q(p) - Q(0)) * g + h.scale(p)
            assert reduce(shifted, p, IdealVariant.QP_MINUS) == \
                reduce(f, p, IdealVariant.QP_MINUS)


class TestParitySplit:
    def test_basic(self):
        f = LaurentPoly({2: 1, 1: 1, 0: 1})
        even, odd = parity_split(f)
        assert even == LaurentPoly({2: 1, 0: 1})
        assert odd == LaurentPoly({1: 1})

    def test_zero(self):
        even, odd = parity_split(LaurentPoly.zero())
        assert even.is_zero() and odd.is_zero()

    def test_negative_odd(self):
        f = LaurentPoly({-3: 1, -1: 1})
        even, odd = parity_split(f)
        assert even.is_zero() and odd == f

    def test_sum_recovers(self):
        rng = random.Random(23)
        for _ in range(50):
            f = _random_poly(rng)
            even, odd = parity_split(f)
            assert even + odd == f


class TestExactDivide:
    def test_examples(self):
        q4m1 = Q(4) - Q(0)
        q2m1 = Q(2) - Q(0)
        assert exact_divide(q4m1, q2m1) == Q(2) + Q(0)
        assert exact_divide(Q(2) - Q(-2), Q(1) - Q(-1)) == Q(1) + Q(-1)

    def test_inexact(self):
        with pytest.raises(InexactDivisionError):
            exact_divide(Q(0), Q(1) - Q(-1))

    def test_zero_divisor_distinct(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(Q(1), LaurentPoly.zero())

    def test_roundtrip_random(self):
        rng = random.Random(29)
        for _ in range(200):
            f = _random_poly(rng)
            g = _random_poly(rng)
            if g.is_zero():
                continue
            assert exact_divide(f * g, g) == f


class TestQuantumInteger:
    @pytest.mark.parametrize("N,expected", [
        (1, {0: 1}),
        (2, {1: 1, -1: 1}),
        (3, {2: 1, 0: 1, -2: 1}),
    ])
    def test_values(self, N, expected):
        assert quantum_integer(N) == LaurentPoly(expected)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            quantum_integer(0)

    def test_ratio_definition(self):
        for N in range(1, 8):
            num = Q(N) - Q(-N)
            den = Q(1) - Q(-1)
            assert exact_divide(num, den) == quantum_integer(N)


def test_serialization_roundtrip():
    f = LaurentPoly({-4: 2, 0: -1, 7: 3})
    assert LaurentPoly.deserialize(f.serialize()) == f
    assert LaurentPoly.zero().serialize() == []
