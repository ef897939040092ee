"""Characters of Q_p^*: algebra, evaluation, weights, decomposition, cases."""

import random
from fractions import Fraction

import pytest

from linv import (
    DeformationContext,
    abs_char,
    char_make,
    classify_pair,
    identity_char,
    log_hom,
    make_field,
    ord_hom,
    recognize_integer,
    semistable_twist_char,
    trivial_char,
)
from linv.characters import zero_hom_into_m

from conftest import rand_element, rand_principal_unit, rand_unit


def _rand_char(field, rng):
    return char_make(
        rand_unit(field, rng),
        rng.randrange(0, field.p - 1),
        rand_principal_unit(field, rng),
    )


class TestAlgebra:
    def test_builtin_values(self, q5):
        x = identity_char(q5)
        assert x.value_at_p == q5.from_int(5)
        assert x.teich_exponent == 1
        assert x.value_at_gamma == q5.from_int(6)
        a = abs_char(q5)
        assert a.value_at_p == q5.from_rational(Fraction(1, 5))
        assert a.value_at_gamma == q5.one()

    def test_x_times_abs(self, q5):
        chi = identity_char(q5) * abs_char(q5)
        assert chi.value_at_p == q5.one()
        assert chi.teich_exponent == 1
        assert chi.value_at_gamma == q5.from_int(6)

    def test_inverse(self, q5):
        x = identity_char(q5)
        prod = x * x.inverse()
        triv = trivial_char(q5)
        assert prod.value_at_p == triv.value_at_p
        assert prod.teich_exponent == 0
        assert prod.value_at_gamma == triv.value_at_gamma

    def test_twist_value_at_p(self, q5):
        for k in range(4):
            chi = semistable_twist_char(q5, k)
            assert chi.value_at_p == q5.from_int(5 ** k)
            assert chi.teich_exponent == (k + 1) % 4


class TestEval:
    def test_identity_at_50(self, q5):
        got = identity_char(q5).eval(Fraction(50))
        assert (got - q5.from_int(50)).is_zero_mod(q5.certified_prec)

    def test_abs_at_50(self, q5):
        got = abs_char(q5).eval(Fraction(50))
        assert (got - q5.from_rational(Fraction(1, 25))).is_zero_mod(
            q5.certified_prec
        )

    def test_trivial_everywhere(self, q5):
        chi = trivial_char(q5)
        for q in (Fraction(3), Fraction(50), Fraction(7, 25), Fraction(-2)):
            assert (chi.eval(q) - q5.one()).is_zero_mod(q5.certified_prec)

    def test_identity_random_rationals(self, q7):
        rng = random.Random(41)
        for _ in range(10):
            q = Fraction(rng.randrange(1, 5000)) * Fraction(7) ** rng.randrange(-2, 3)
            got = identity_char(q7).eval(q)
            assert (got - q7.from_rational(q)).is_zero_mod(q7.certified_prec)

    def test_multiplicative_in_argument(self, q5):
        rng = random.Random(43)
        chi = _rand_char(q5, rng)
        for _ in range(5):
            q1 = Fraction(rng.randrange(1, 1000))
            q2 = Fraction(rng.randrange(1, 1000))
            lhs = chi.eval(q1 * q2)
            rhs = chi.eval(q1) * chi.eval(q2)
            assert (lhs - rhs).is_zero_mod(q5.certified_prec)


class TestWeight:
    def test_tate_twist_weight(self, q5):
        w = (identity_char(q5) * abs_char(q5)).weight()
        assert recognize_integer(w) == -1

    def test_trivial_and_factors(self, q5):
        assert recognize_integer(trivial_char(q5).weight()) == 0
        assert recognize_integer(identity_char(q5).weight()) == -1
        assert recognize_integer(abs_char(q5).weight()) == 0

    def test_additive(self, q7):
        rng = random.Random(47)
        for _ in range(10):
            a, b = _rand_char(q7, rng), _rand_char(q7, rng)
            diff = (a * b).weight() - a.weight() - b.weight()
            assert diff.is_zero_mod(q7.certified_prec)


class TestDecompose:
    def test_zero_tangent_lift(self, q5):
        ctx = DeformationContext(q5, 1)
        rng = random.Random(53)
        chi = _rand_char(q5, rng).lift(ctx)
        chi0, chi1 = chi.decompose()
        assert chi1.is_zero_mod(50)
        assert chi0.value_at_p == chi.value_at_p.body

    def test_tangent_ratio(self, q5):
        ctx = DeformationContext(q5, 1)
        u = q5.from_int(3)
        mu = ctx.mvector([q5.from_int(10)])
        chi = char_make(
            ctx.element(u, mu), 0, ctx.one()
        )
        _, chi1 = chi.decompose()
        want = mu.div(u)
        assert (chi1.at_p - want).is_zero_mod(q5.certified_prec)

    def test_product_rule(self, q5):
        """(ab)_0 = a_0 b_0 and (ab)_1 = a_1 + b_1, componentwise."""
        ctx = DeformationContext(q5, 2)
        rng = random.Random(59)

        def lifted(rng):
            base = _rand_char(q5, rng).lift(ctx)
            bump = char_make(
                ctx.element(
                    q5.one(), ctx.mvector([rand_element(q5, rng, vmin=0) for _ in range(2)])
                ),
                0,
                ctx.element(
                    q5.one(), ctx.mvector([rand_element(q5, rng, vmin=0) for _ in range(2)])
                ),
            )
            return base * bump

        for _ in range(5):
            a, b = lifted(rng), lifted(rng)
            p0, p1 = (a * b).decompose()
            a0, a1 = a.decompose()
            b0, b1 = b.decompose()
            assert (p0.value_at_p - a0.value_at_p * b0.value_at_p).is_zero_mod(
                q5.certified_prec
            )
            assert (p1 - (a1 + b1)).is_zero_mod(q5.certified_prec)


class TestHomomorphisms:
    def test_basis_values(self, q5):
        lg = log_hom(q5)
        od = ord_hom(q5)
        assert lg.at_p.is_zero_mod(q5.certified_prec)
        assert lg.at_gamma == q5.log_gamma0
        assert od.at_p == q5.one()
        assert od.at_gamma.is_zero_mod(50)

    def test_eval_coords_linear(self, q5):
        rng = random.Random(61)
        h = log_hom(q5).scale(q5.from_int(3)) + ord_hom(q5).scale(q5.from_int(2))
        a, b = rand_element(q5, rng), rand_element(q5, rng)
        want = a * h.at_p + b * h.at_gamma
        assert (h.eval_coords(a, b) - want).is_zero_mod(q5.certified_prec)

    def test_zero_into_m(self, q5):
        ctx = DeformationContext(q5, 2)
        assert zero_hom_into_m(ctx).is_zero_mod(50)


class TestClassify:
    def test_second_cases(self, q5):
        rng = random.Random(67)
        for k in range(4):
            delta0 = _rand_char(q5, rng)
            eta0 = delta0 * semistable_twist_char(q5, k)
            case = classify_pair(delta0, eta0)
            assert case.kind == "second" and case.k == k

    def test_third_cases(self, q5):
        rng = random.Random(71)
        for k in range(4):
            delta0 = _rand_char(q5, rng)
            eta0 = delta0 * identity_char(q5) ** (-k)
            case = classify_pair(delta0, eta0)
            assert case.kind == "third" and case.k == k

    def test_tate_twist_is_second_zero(self, q5):
        case = classify_pair(trivial_char(q5), identity_char(q5) * abs_char(q5))
        assert str(case) == "second(0)"

    def test_self_extension_is_third_zero(self, q5):
        case = classify_pair(trivial_char(q5), trivial_char(q5))
        assert str(case) == "third(0)"

    def test_generic_is_first(self, q5):
        delta0 = trivial_char(q5)
        eta0 = char_make(q5.from_int(2), 0, q5.one())
        assert classify_pair(delta0, eta0).kind == "first"

    def test_wrong_teich_is_first(self, q5):
        # right weight and right values at p and gamma0, wrong torsion part
        delta0 = trivial_char(q5)
        eta0 = char_make(q5.from_int(5), 0, q5.from_int(6))
        assert classify_pair(delta0, eta0).kind == "first"
