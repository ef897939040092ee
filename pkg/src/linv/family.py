"""Differential identities over first-order deformations and the verifier.

A Scenario packages a pair of B-valued characters together with the
extension-class coordinates of the specialization; theorem_verify checks
that the logarithmic derivative at p minus the L-invariant times the
derivative of the weight vanishes at the certified precision, reproducing
each proof step (case classification, consistency constraint, purity,
orthogonality) along the way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from .characters import (
    Character,
    CharacterCase,
    Homomorphism,
    classify_pair,
    log_hom,
    ord_hom,
    semistable_twist_char,
)
from .cohomology import (
    KummerClass,
    ProjectivePoint,
    L_inv,
    pure_tensor_analyze,
    tate_pair,
)
from .deformation import DeformationContext, DeformationElement, MVector, dlog
from .errors import (
    CrystallineSpecializationError,
    InconsistentScenarioError,
    InvalidArgumentError,
    PreconditionViolatedError,
    WrongCaseError,
    ZeroInputError,
    ZeroValuationError,
)
from .padic import FieldElement, UnramifiedField, _vp, iwasawa_log, make_field


def dlog_at_p(delta: Character) -> MVector:
    """Logarithmic derivative of the value at p: tangent/body of delta(p)."""
    if not delta.over_b:
        raise InvalidArgumentError("dlog_at_p applies to B-valued characters")
    return dlog(delta.value_at_p)


def dwt(delta: Character) -> MVector:
    """Derivative of the weight: tangent of the weight computed over B.

    Cross-checked against -delta1(gamma0)/log(gamma0); the two routes agree
    identically by construction of the algebra, so a mismatch would flag an
    arithmetic bug.
    """
    if not delta.over_b:
        raise InvalidArgumentError("dwt applies to B-valued characters")
    fld = delta.field
    via_weight = delta.weight().tangent
    _, delta1 = delta.decompose()
    direct = -delta1.at_gamma.scale(fld.inv_log_gamma0)
    assert (via_weight - direct).is_zero_mod(fld.certified_prec)
    return via_weight


def eq2_residual(delta: Character) -> MVector:
    """dlog at p minus Lstar(delta1) times dwt; zero for pure tangents.

    Requires delta1 to be a pure tensor with finite Lstar.
    """
    _, delta1 = delta.decompose()
    fld = delta.field
    if delta1.is_zero_mod(fld.certified_prec):
        raise ZeroInputError("tangent part vanishes; no invariant to test")
    report = pure_tensor_analyze(delta1)
    if not report.is_pure:
        raise PreconditionViolatedError("tangent part is not a pure tensor")
    if report.Lstar.is_infinity:
        raise PreconditionViolatedError("Lstar is infinite")
    return dlog_at_p(delta) - dwt(delta).scale(report.Lstar.value)


def second_case_constraint(c: Homomorphism, q0: KummerClass) -> MVector:
    """Evaluation of c on the extension class; consistency demands zero."""
    return tate_pair(q0, c)


def tate_L_invariant(q, field: UnramifiedField = None):
    """log(q)/ord(q) for a Tate parameter with nonzero valuation.

    q may be a nonzero rational (field required) or a KummerClass, in which
    case the value is (b * log(gamma0)) / a in coordinates.
    """
    if isinstance(q, KummerClass):
        if q.a.valuation() is None:
            raise ZeroValuationError("class has ord = 0")
        return q.log_part() / q.a
    if field is None:
        raise InvalidArgumentError("a field descriptor is required for rationals")
    q = Fraction(q)
    if q == 0:
        raise InvalidArgumentError("Tate parameter must be nonzero")
    v = _vp(q.numerator, field.p) - _vp(q.denominator, field.p)
    if v == 0:
        raise ZeroValuationError(f"{q} is a unit at p = {field.p}")
    return iwasawa_log(field.from_rational(q)).mul_scalar(
        field.scalar_recip(v)
    )


# -- scenarios ---------------------------------------------------------


@dataclass
class Scenario:
    """Verification input: characters over B plus extension-class data."""

    ctx: DeformationContext
    delta: Character
    eta: Character
    q0: KummerClass
    label: str = ""

    @property
    def field(self) -> UnramifiedField:
        return self.ctx.field


@dataclass
class TheoremReport:
    """Outcome of one theorem verification, with precision annotations."""

    label: str
    case: CharacterCase
    l_invariant: ProjectivePoint
    dlog_p: MVector
    dwt_value: MVector
    residual: MVector
    prime: int
    certified_prec: int
    passed: bool
    pure_tensor: Optional[bool] = None
    orthogonality_ok: Optional[bool] = None
    notes: list = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "case": str(self.case),
            "L_invariant": repr(self.l_invariant),
            "dlog_p": repr(self.dlog_p),
            "dwt": repr(self.dwt_value),
            "residual": repr(self.residual),
            "prime": self.prime,
            "certified_prec": self.certified_prec,
            "certified_modulus": f"{self.prime}^{self.certified_prec}",
            "pure_tensor": self.pure_tensor,
            "orthogonality_ok": self.orthogonality_ok,
            "passed": self.passed,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [
            f"scenario {self.label or '<unlabeled>'}: "
            f"{'PASS' if self.passed else 'FAIL'}",
            f"  case:        {self.case}",
            f"  L(D0):       {self.l_invariant!r}",
            f"  dlog at p:   {self.dlog_p!r}",
            f"  dwt:         {self.dwt_value!r}",
            f"  residual:    {self.residual!r}",
            f"  certified:   zero mod {self.prime}^{self.certified_prec}"
            if self.passed
            else f"  certified:   NOT zero mod {self.prime}^{self.certified_prec}",
        ]
        if self.pure_tensor is not None:
            lines.append(f"  pure tensor: {self.pure_tensor}")
        if self.orthogonality_ok is not None:
            lines.append(f"  L = L*(c):   {self.orthogonality_ok}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def theorem_verify(s: Scenario, k_max: int = 100) -> TheoremReport:
    """Run the main verification on one scenario.

    Checks, in order: the character pair is in the semistable twist case;
    the extension class is noncrystalline (ord != 0); the tangent part of
    eta/delta annihilates the class.  Then certifies that
    dlog(eta/delta at p) - L(q0) * dwt(eta/delta) vanishes, and reproduces
    the purity/orthogonality steps when the tangent part is nonzero.
    """
    fld = s.field
    tol = fld.certified_prec
    rho = s.eta * s.delta.inverse()
    rho0, rho1 = rho.decompose()
    delta0, _ = s.delta.decompose()
    eta0, _ = s.eta.decompose()
    case = classify_pair(delta0, eta0, k_max)
    if case.kind != "second":
        raise WrongCaseError(f"character pair is in case {case}")
    if s.q0.a.is_zero_mod(tol):
        raise CrystallineSpecializationError(
            "ord of the extension class is zero: crystalline up to twist"
        )
    constraint = second_case_constraint(rho1, s.q0)
    if not constraint.is_zero_mod(tol):
        raise InconsistentScenarioError(
            "tangent part does not annihilate the extension class"
        )
    l_point = L_inv(s.q0)
    dp = dlog_at_p(rho)
    dw = dwt(rho)
    residual = dp - dw.scale(l_point.value)
    pure = None
    orth_ok = None
    notes = []
    if rho1.is_zero_mod(tol):
        notes.append("tangent part is zero: both terms vanish individually")
    else:
        report = pure_tensor_analyze(rho1)
        pure = report.is_pure
        if report.is_pure:
            orth_ok = report.Lstar == l_point
        else:
            notes.append("tangent part is not a pure tensor")
    passed = (
        residual.is_zero_mod(tol)
        and pure is not False
        and orth_ok is not False
    )
    return TheoremReport(
        label=s.label,
        case=case,
        l_invariant=l_point,
        dlog_p=dp,
        dwt_value=dw,
        residual=residual,
        prime=fld.p,
        certified_prec=tol,
        passed=passed,
        pure_tensor=pure,
        orthogonality_ok=orth_ok,
        notes=notes,
    )


# -- randomized consistent scenarios -----------------------------------


def _rand_element(rng, fld, bound, nonzero=False):
    while True:
        e = fld.element([rng.randint(-bound, bound) for _ in range(fld.degree)])
        if not nonzero or e.valuation() is not None:
            return e


def _rand_unit(rng, fld, bound):
    while True:
        e = _rand_element(rng, fld, bound, nonzero=True)
        if e.valuation() == 0:
            return e


def _rand_principal(rng, fld, bound):
    return fld.one() + _rand_element(rng, fld, bound).shift(1)


def _rand_mvector(rng, ctx, bound, nonzero=False):
    while True:
        mv = ctx.mvector(
            [_rand_element(rng, ctx.field, bound) for _ in range(ctx.dim)]
        )
        if not nonzero or not mv.is_zero_mod(ctx.field.certified_prec):
            return mv


def one_plus_char(ctx: DeformationContext, c: Homomorphism) -> Character:
    """The B-valued character 1 + c for a homomorphism c into m."""
    one = ctx.field.one()
    return Character(
        DeformationElement(ctx, one, c.at_p),
        0,
        DeformationElement(ctx, one, c.at_gamma),
    )


def scenario_generate(
    seed: int,
    p: int,
    d: int = 1,
    r: int = 1,
    k: int = 0,
    precision: int = 50,
    coeff_bound: int = 3,
) -> Scenario:
    """Draw a consistent scenario: all theorem hypotheses hold by construction.

    The extension class is p^a * gamma0^b with a != 0, the tangent part of
    eta/delta is (a*log - b*log(gamma0)*ord) tensor mu, orthogonal to the
    class by design, and eta is delta twisted by the semistable pattern.
    """
    rng = random.Random(f"{seed}:{p}:{d}:{r}:{k}")
    fld = make_field(p, d, precision=precision)
    ctx = DeformationContext(fld, r)
    a = _rand_element(rng, fld, coeff_bound, nonzero=True)
    b = _rand_element(rng, fld, coeff_bound)
    q0 = KummerClass(a, b)
    lg = fld.log_gamma0
    h = log_hom(fld).scale(a) - ord_hom(fld).scale(b * lg)
    mu = _rand_mvector(rng, ctx, coeff_bound, nonzero=True)
    c = h.tensor(mu)
    delta = Character(
        DeformationElement(
            ctx,
            _rand_unit(rng, fld, coeff_bound).shift(rng.randint(-1, 1)),
            _rand_mvector(rng, ctx, coeff_bound),
        ),
        rng.randrange(p - 1),
        DeformationElement(
            ctx,
            _rand_principal(rng, fld, coeff_bound),
            _rand_mvector(rng, ctx, coeff_bound),
        ),
    )
    eta = delta * semistable_twist_char(fld, k).lift(ctx) * one_plus_char(ctx, c)
    label = f"seed{seed}-p{p}-d{d}-r{r}-k{k}"
    return Scenario(ctx=ctx, delta=delta, eta=eta, q0=q0, label=label)
