"""Coordinate cohomology: pairing, invariants, purity, the first identity."""

import random

import pytest

from linv import (
    DeformationContext,
    KummerClass,
    L_inv,
    ProjectivePoint,
    dual_L_inv,
    eq1_residual,
    hom_coeffs,
    log_hom,
    matrix_rank,
    ord_hom,
    orthogonal,
    pure_tensor_analyze,
    tate_pair,
)
from linv.characters import Homomorphism, zero_hom_into_m
from linv.cohomology import (
    pure_by_orthogonal_solve,
    pure_by_proportionality,
    pure_by_rank,
)
from linv.errors import UndefinedInvariantError, ZeroInputError

from conftest import rand_element


def _relt(F, rng):
    # nonnegative valuations keep residuals inside the certified tolerance
    return rand_element(F, rng, vmin=0)


def _rand_hom_into_m(ctx, rng, rank_one=None):
    F = ctx.field
    if rank_one:
        base = log_hom(F).scale(_relt(F, rng)) + ord_hom(F).scale(_relt(F, rng))
        return base.tensor(ctx.mvector([_relt(F, rng) for _ in range(ctx.dim)]))
    return Homomorphism(
        ctx.mvector([_relt(F, rng) for _ in range(ctx.dim)]),
        ctx.mvector([_relt(F, rng) for _ in range(ctx.dim)]),
    )


class TestPairing:
    def test_basis_matrix(self, q5):
        """(p, gamma0) against (log, ord) pairs to [[0, 1], [log gamma0, 0]]."""
        P = KummerClass.make(q5, q5.one(), q5.zero())
        G = KummerClass.make(q5, q5.zero(), q5.one())
        lg, od = log_hom(q5), ord_hom(q5)
        tol = q5.precision - 1
        assert tate_pair(P, lg).is_zero_mod(tol)
        assert (tate_pair(P, od) - q5.one()).is_zero_mod(tol)
        assert (tate_pair(G, lg) - q5.log_gamma0).is_zero_mod(tol)
        assert tate_pair(G, od).is_zero_mod(tol)

    def test_zero_hom(self, q5):
        q = KummerClass.make(q5, q5.from_int(2), q5.from_int(3))
        z = Homomorphism(q5.zero(), q5.zero())
        assert tate_pair(q, z).is_zero_mod(50)

    def test_designed_orthogonal(self, q5):
        rng = random.Random(73)
        for _ in range(10):
            a, b = rand_element(q5, rng), rand_element(q5, rng)
            q = KummerClass.make(q5, a, b)
            h = log_hom(q5).scale(a) - ord_hom(q5).scale(b * q5.log_gamma0)
            assert tate_pair(q, h).is_zero_mod(q5.certified_prec)

    def test_bilinear(self, q7):
        rng = random.Random(79)
        c = rand_element(q7, rng)
        q = KummerClass.make(q7, rand_element(q7, rng), rand_element(q7, rng))
        h = log_hom(q7).scale(rand_element(q7, rng)) + ord_hom(q7).scale(
            rand_element(q7, rng)
        )
        assert (tate_pair(q.scale(c), h) - tate_pair(q, h) * c).is_zero_mod(
            q7.certified_prec
        )
        assert (tate_pair(q, h.scale(c)) - tate_pair(q, h) * c).is_zero_mod(
            q7.certified_prec
        )


class TestHomCoeffs:
    def test_log_itself(self, q5):
        lc, oc = hom_coeffs(log_hom(q5))
        assert (lc - q5.one()).is_zero_mod(q5.certified_prec)
        assert oc.is_zero_mod(q5.certified_prec)

    def test_ord_itself(self, q5):
        lc, oc = hom_coeffs(ord_hom(q5))
        assert lc.is_zero_mod(q5.certified_prec)
        assert (oc - q5.one()).is_zero_mod(q5.certified_prec)

    def test_reconstruction(self, q5):
        rng = random.Random(83)
        for _ in range(10):
            h = log_hom(q5).scale(rand_element(q5, rng)) + ord_hom(q5).scale(
                rand_element(q5, rng)
            )
            lc, oc = hom_coeffs(h)
            back = log_hom(q5).scale(lc) + ord_hom(q5).scale(oc)
            assert (back - h).is_zero_mod(q5.certified_prec)


class TestInvariants:
    def test_L_inv_values(self, q5):
        q = KummerClass.make(q5, q5.one(), q5.zero())
        assert L_inv(q) == ProjectivePoint.finite(q5.zero())
        q = KummerClass.make(q5, q5.zero(), q5.one())
        assert L_inv(q).is_infinity

    def test_dual_L_inv_values(self, q5):
        assert dual_L_inv(ord_hom(q5)) == ProjectivePoint.infinity()
        pt = dual_L_inv(log_hom(q5))
        assert not pt.is_infinity
        assert pt.value.is_zero_mod(q5.certified_prec)

    def test_scale_invariance(self, q7):
        rng = random.Random(89)
        for _ in range(10):
            c = rand_element(q7, rng)
            q = KummerClass.make(q7, rand_element(q7, rng), rand_element(q7, rng))
            assert L_inv(q) == L_inv(q.scale(c))

    def test_undefined_on_fuzzy_ratio(self, q5):
        with pytest.raises(UndefinedInvariantError):
            ProjectivePoint.from_ratio(q5.zero(), q5.zero())


class TestOrthogonality:
    def test_iff_equal_invariants_exhaustive(self, q5):
        coords = range(-2, 3)
        classes = [
            KummerClass.make(q5, q5.from_int(a), q5.from_int(b))
            for a in coords
            for b in coords
            if (a, b) != (0, 0)
        ]
        homs = [
            log_hom(q5).scale(q5.from_int(u)) + ord_hom(q5).scale(q5.from_int(v))
            for u in coords
            for v in coords
            if (u, v) != (0, 0)
        ]
        for q in classes:
            for h in homs:
                assert orthogonal(q, h) == (L_inv(q) == dual_L_inv(h))


class TestPurity:
    def test_formulations_agree(self, q5):
        rng = random.Random(97)
        for r in (1, 2):
            ctx = DeformationContext(q5, r)
            for i in range(40):
                c = _rand_hom_into_m(ctx, rng, rank_one=(i % 2 == 0))
                votes = {
                    pure_by_proportionality(c),
                    pure_by_orthogonal_solve(c),
                    pure_by_rank(c),
                }
                assert len(votes) == 1

    def test_forced_pure(self, q5):
        rng = random.Random(101)
        ctx = DeformationContext(q5, 2)
        for _ in range(10):
            c = _rand_hom_into_m(ctx, rng, rank_one=True)
            report = pure_tensor_analyze(c)
            assert report.is_pure
            assert tate_pair(report.q, report.h).is_zero_mod(q5.certified_prec)

    def test_forced_impure(self, q5):
        ctx = DeformationContext(q5, 2)
        # log x e1 + ord x e2: coefficient matrix has rank 2
        c = Homomorphism(
            ctx.mvector([q5.zero(), q5.one()]),
            ctx.mvector([q5.log_gamma0, q5.zero()]),
        )
        assert not pure_tensor_analyze(c).is_pure

    def test_zero_rejected(self, q5):
        ctx = DeformationContext(q5, 1)
        with pytest.raises(ZeroInputError):
            pure_tensor_analyze(zero_hom_into_m(ctx))


class TestMatrixRank:
    def test_small_cases(self, q5):
        one, zero = q5.one(), q5.zero()
        tol = q5.certified_prec
        assert matrix_rank([[one, zero], [zero, one]], tol) == 2
        assert matrix_rank([[one, one], [one, one]], tol) == 1
        assert matrix_rank([[zero, zero]], tol) == 0

    def test_valuation_pivoting(self, q5):
        # rows proportional by a unit times p: rank 1 despite mixed valuations
        a = q5.from_int(5)
        rows = [[q5.one(), q5.from_int(3)], [a, q5.from_int(15)]]
        assert matrix_rank(rows, q5.certified_prec) == 1


class TestEq1:
    def test_log_tensor(self, q5):
        ctx = DeformationContext(q5, 1)
        mu = ctx.mvector([q5.from_int(3)])
        c = log_hom(q5).tensor(mu)
        report = pure_tensor_analyze(c)
        assert not report.Lstar.is_infinity
        assert report.Lstar.value.is_zero_mod(q5.certified_prec)
        assert eq1_residual(c).is_zero_mod(q5.certified_prec)

    def test_log_minus_ord(self, q5):
        ctx = DeformationContext(q5, 1)
        mu = ctx.mvector([q5.from_int(2)])
        c = (log_hom(q5) - ord_hom(q5)).tensor(mu)
        report = pure_tensor_analyze(c)
        assert (report.Lstar.value - q5.one()).is_zero_mod(q5.certified_prec)
        assert eq1_residual(c).is_zero_mod(q5.certified_prec)

    def test_random_pure_tensors(self, q7):
        rng = random.Random(103)
        for r in (1, 2):
            ctx = DeformationContext(q7, r)
            n = 0
            while n < 15:
                c = _rand_hom_into_m(ctx, rng, rank_one=True)
                report = pure_tensor_analyze(c)
                if report.Lstar.is_infinity:
                    continue
                assert eq1_residual(c).is_zero_mod(q7.certified_prec)
                n += 1
