"""Coordinate models of the two rank-one cohomology groups and their pairing.

Degree-one classes with Tate-twisted coefficients are written p^a * gamma0^b;
untwisted classes are homomorphisms stored by their values at p and gamma0.
The pairing is evaluation, the projective invariants are read off the
(log, ord) coordinates, and purity of tensors into m is a rank condition
decided by Gaussian elimination with valuation pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .characters import Homomorphism, _scale
from .deformation import MVector
from .errors import (
    FieldMismatchError,
    PreconditionViolatedError,
    UndefinedInvariantError,
    ZeroInputError,
)
from .padic import FieldElement, UnramifiedField


class KummerClass:
    """The class p^a * gamma0^b, coordinates a, b in E."""

    __slots__ = ("a", "b")

    def __init__(self, a: FieldElement, b: FieldElement):
        if a.field != b.field:
            raise FieldMismatchError("coordinates over different fields")
        self.a = a
        self.b = b

    @property
    def field(self) -> UnramifiedField:
        return self.a.field

    @staticmethod
    def make(field: UnramifiedField, a, b) -> "KummerClass":
        conv = lambda v: v if isinstance(v, FieldElement) else field.from_rational(v)
        return KummerClass(conv(a), conv(b))

    def ord_part(self) -> FieldElement:
        return self.a

    def log_part(self) -> FieldElement:
        return self.b * self.field.log_gamma0

    def scale(self, c: FieldElement) -> "KummerClass":
        return KummerClass(self.a * c, self.b * c)

    def __add__(self, other):
        return KummerClass(self.a + other.a, self.b + other.b)

    def is_zero_mod(self, n: int) -> bool:
        return self.a.is_zero_mod(n) and self.b.is_zero_mod(n)

    def is_zero(self) -> bool:
        return self.a.valuation() is None and self.b.valuation() is None

    def __repr__(self):
        return f"p^({self.a!r}) * gamma0^({self.b!r})"


class ProjectivePoint:
    """Point of the projective line over E: Finite(value) or Infinity."""

    __slots__ = ("value",)

    def __init__(self, value: Optional[FieldElement]):
        self.value = value

    @staticmethod
    def finite(value: FieldElement) -> "ProjectivePoint":
        return ProjectivePoint(value)

    @staticmethod
    def infinity() -> "ProjectivePoint":
        return ProjectivePoint(None)

    @staticmethod
    def from_ratio(u: FieldElement, v: FieldElement) -> "ProjectivePoint":
        """The point (u : v); (0 : 0) is rejected.

        A denominator indistinguishable from zero yields Infinity; exact
        vanishing is not decidable numerically, so reports carry precision.
        """
        if v.valuation() is not None:
            return ProjectivePoint(u / v)
        if u.valuation() is None:
            raise UndefinedInvariantError("(0 : 0) is not a projective point")
        return ProjectivePoint(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.value == other.value

    __hash__ = None

    def __repr__(self):
        return "Infinity" if self.is_infinity else f"Finite({self.value!r})"


# -- pairing and invariants --------------------------------------------


def hom_coeffs(h: Homomorphism):
    """Coordinates (log_coeff, ord_coeff) in the ordered (log, ord) basis."""
    fld = h.field
    return _scale(h.at_gamma, fld.inv_log_gamma0), h.at_p


def tate_pair(q: KummerClass, h: Homomorphism):
    """a*h(p) + b*h(gamma0): evaluation realizing the local duality pairing."""
    return h.eval_coords(q.a, q.b)


def L_inv(q: KummerClass) -> ProjectivePoint:
    """(log of the class : ord of the class) = (b*log(gamma0) : a)."""
    if q.is_zero():
        raise UndefinedInvariantError("L-invariant of the zero class")
    return ProjectivePoint.from_ratio(q.log_part(), q.a)


def dual_L_inv(h: Homomorphism) -> ProjectivePoint:
    """(-ord coefficient : log coefficient) of a nonzero homomorphism."""
    log_c, ord_c = hom_coeffs(h)
    if log_c.valuation() is None and ord_c.valuation() is None:
        raise UndefinedInvariantError("dual L-invariant of the zero class")
    return ProjectivePoint.from_ratio(-ord_c, log_c)


def orthogonal(q: KummerClass, h: Homomorphism, tol: int | None = None) -> bool:
    """Whether the pairing vanishes at the certified precision."""
    if tol is None:
        tol = q.field.certified_prec
    return tate_pair(q, h).is_zero_mod(tol)


# -- exact linear algebra over E ---------------------------------------


def matrix_rank(rows, tol: int) -> int:
    """Rank of a matrix of FieldElements, treating entries that vanish
    mod p^tol as zero.  Pivots are chosen with smallest valuation to
    control precision loss."""
    rows = [list(r) for r in rows]
    rank = 0
    while rows:
        best = None
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                v = e.valuation()
                if v is None or v >= tol:
                    continue
                if best is None or v < best[2]:
                    best = (i, j, v)
        if best is None:
            break
        rank += 1
        i, j, _ = best
        piv_row = rows.pop(i)
        piv = piv_row[j]
        for row in rows:
            v = row[j].valuation()
            if v is not None and v < tol:
                f = row[j] / piv
                for t in range(len(row)):
                    row[t] = row[t] - f * piv_row[t]
    return rank


# -- pure tensors ------------------------------------------------------


@dataclass
class PureTensorReport:
    """Outcome of analyzing a homomorphism into m for pure-tensor shape."""

    is_pure: bool
    q: Optional[KummerClass] = None
    h: Optional[Homomorphism] = None
    Lstar: Optional[ProjectivePoint] = None


def _coeff_vectors(c: Homomorphism):
    log_c, ord_c = hom_coeffs(c)
    return list(log_c.entries), list(ord_c.entries)


def _witness_index(lc, oc, tol):
    best, best_v = None, None
    for i, (l, o) in enumerate(zip(lc, oc)):
        for e in (l, o):
            v = e.valuation()
            if v is None or v >= tol:
                continue
            if best_v is None or v < best_v:
                best, best_v = i, v
    return best


def pure_tensor_analyze(c: Homomorphism) -> PureTensorReport:
    """Decide purity of c and extract its witnesses.

    A nonzero c into m is pure when its (log, ord) coefficient vectors in m
    are E-proportional; the witnesses are a spanning homomorphism h, an
    orthogonal class q (both unique up to scale), and the proportionality
    point Lstar = (-ord : log).
    """
    if not c.into_m:
        raise FieldMismatchError("pure-tensor analysis applies to maps into m")
    fld = c.field
    tol = fld.certified_prec
    if c.is_zero_mod(tol):
        raise ZeroInputError("the zero map is vacuously a tensor")
    lc, oc = _coeff_vectors(c)
    if matrix_rank([lc, oc], tol) > 1:
        return PureTensorReport(is_pure=False)
    i = _witness_index(lc, oc, tol)
    h = Homomorphism(c.at_p.entries[i], c.at_gamma.entries[i])
    q = KummerClass(h.at_gamma, -h.at_p)
    lstar = ProjectivePoint.from_ratio(-oc[i], lc[i])
    return PureTensorReport(is_pure=True, q=q, h=h, Lstar=lstar)


def pure_by_proportionality(c: Homomorphism, tol: int | None = None) -> bool:
    """Purity via vanishing of all 2x2 minors of the coefficient vectors."""
    if tol is None:
        tol = c.field.certified_prec
    lc, oc = _coeff_vectors(c)
    r = len(lc)
    for i in range(r):
        for j in range(i + 1, r):
            if not (lc[i] * oc[j] - lc[j] * oc[i]).is_zero_mod(tol):
                return False
    return True


def pure_by_orthogonal_solve(c: Homomorphism, tol: int | None = None) -> bool:
    """Purity via existence of a nonzero class annihilating c.

    Each m-coordinate imposes one linear condition a*c(p)_i + b*c(g)_i = 0
    on (a, b); solve the strongest one and check the rest.
    """
    if tol is None:
        tol = c.field.certified_prec
    xs = list(c.at_p.entries)
    ys = list(c.at_gamma.entries)
    i = _witness_index(ys, xs, tol)
    if i is None:
        return True  # c vanishes at precision: any nonzero class works
    a, b = ys[i], -xs[i]
    return all(
        (a * x + b * y).is_zero_mod(tol) for x, y in zip(xs, ys)
    )


def pure_by_rank(c: Homomorphism, tol: int | None = None) -> bool:
    """Purity via dim of the span of the specializations of c being <= 1."""
    if tol is None:
        tol = c.field.certified_prec
    lc, oc = _coeff_vectors(c)
    return matrix_rank([lc, oc], tol) <= 1


def eq1_residual(c: Homomorphism) -> MVector:
    """ord-coefficient + Lstar * log-coefficient; zero for pure tensors.

    Only defined when c is a pure tensor with finite Lstar.
    """
    report = pure_tensor_analyze(c)
    if not report.is_pure:
        raise PreconditionViolatedError("c is not a pure tensor")
    if report.Lstar.is_infinity:
        raise PreconditionViolatedError("Lstar is infinite")
    log_c, ord_c = hom_coeffs(c)
    return ord_c + log_c.scale(report.Lstar.value)
