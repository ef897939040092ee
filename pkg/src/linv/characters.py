"""Continuous characters of Q_p^x valued in E^x or B^x.

A character is stored by its values at the three topological generators:
p, the fixed Teichmuller generator of the prime-to-p torsion (kept as an
exact exponent), and the principal-unit generator gamma0 = 1 + p.  The
torsion part is exact by construction; the principal part is a unit whose
Z_p-powers are computed through exp/log.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .deformation import DeformationContext, DeformationElement, MVector
from .errors import (
    DiscontinuousCharacterError,
    FieldMismatchError,
    InvalidArgumentError,
)
from .padic import (
    FieldElement,
    UnramifiedField,
    _vp,
    iwasawa_log,
    p_exp,
    recognize_integer,
)


class Homomorphism:
    """Continuous homomorphism from the pro-p completion of Q_p^x.

    Determined by its values at p and gamma0 (torsion dies in a torsion-free
    target).  Values are FieldElements (target E) or MVectors (target m).
    """

    __slots__ = ("at_p", "at_gamma")

    def __init__(self, at_p, at_gamma):
        if type(at_p) is not type(at_gamma):
            raise FieldMismatchError("values must land in the same target")
        self.at_p = at_p
        self.at_gamma = at_gamma

    @property
    def into_m(self) -> bool:
        return isinstance(self.at_p, MVector)

    @property
    def field(self) -> UnramifiedField:
        return self.at_p.ctx.field if self.into_m else self.at_p.field

    def __add__(self, other):
        return Homomorphism(self.at_p + other.at_p, self.at_gamma + other.at_gamma)

    def __sub__(self, other):
        return Homomorphism(self.at_p - other.at_p, self.at_gamma - other.at_gamma)

    def __neg__(self):
        return Homomorphism(-self.at_p, -self.at_gamma)

    def scale(self, c: FieldElement) -> "Homomorphism":
        return Homomorphism(_scale(self.at_p, c), _scale(self.at_gamma, c))

    def tensor(self, mu: MVector) -> "Homomorphism":
        """h tensor mu: a homomorphism into m (self must land in E)."""
        if self.into_m:
            raise FieldMismatchError("already lands in m")
        return Homomorphism(mu.scale(self.at_p), mu.scale(self.at_gamma))

    def eval_coords(self, a: FieldElement, b: FieldElement):
        """Value at the class p^a * gamma0^b: a*h(p) + b*h(gamma0)."""
        return _scale(self.at_p, a) + _scale(self.at_gamma, b)

    def is_zero_mod(self, n: int) -> bool:
        return self.at_p.is_zero_mod(n) and self.at_gamma.is_zero_mod(n)

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return self.at_p == other.at_p and self.at_gamma == other.at_gamma

    __hash__ = None

    def __repr__(self):
        return f"Hom(p -> {self.at_p!r}, gamma0 -> {self.at_gamma!r})"


def _scale(value, c: FieldElement):
    return value.scale(c) if isinstance(value, MVector) else value * c


def log_hom(field: UnramifiedField) -> Homomorphism:
    """log_p as a homomorphism: kills p, sends gamma0 to log(gamma0)."""
    return Homomorphism(field.zero(), field.log_gamma0)


def ord_hom(field: UnramifiedField) -> Homomorphism:
    """ord_p as a homomorphism: sends p to 1, kills units."""
    return Homomorphism(field.one(), field.zero())


def zero_hom_into_m(ctx: DeformationContext) -> Homomorphism:
    return Homomorphism(ctx.zero_mvector(), ctx.zero_mvector())


class Character:
    """Continuous character of Q_p^x, valued in E^x or B^x."""

    __slots__ = ("value_at_p", "teich_exponent", "value_at_gamma")

    def __init__(self, value_at_p, teich_exponent: int, value_at_gamma):
        if type(value_at_p) is not type(value_at_gamma):
            raise FieldMismatchError("character values must share a ring")
        self.value_at_p = value_at_p
        self.value_at_gamma = value_at_gamma
        self.teich_exponent = teich_exponent % (self.field.p - 1)

    @property
    def over_b(self) -> bool:
        return isinstance(self.value_at_p, DeformationElement)

    @property
    def field(self) -> UnramifiedField:
        if isinstance(self.value_at_p, DeformationElement):
            return self.value_at_p.ctx.field
        return self.value_at_p.field

    @property
    def ctx(self):
        return self.value_at_p.ctx if self.over_b else None

    def _check(self, other: "Character"):
        if self.over_b != other.over_b or self.field != other.field:
            raise FieldMismatchError("characters over different rings")
        if self.over_b and self.ctx != other.ctx:
            raise FieldMismatchError("characters over different contexts")

    # -- algebra ------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        return Character(
            self.value_at_p * other.value_at_p,
            self.teich_exponent + other.teich_exponent,
            self.value_at_gamma * other.value_at_gamma,
        )

    def inverse(self) -> "Character":
        return Character(
            self.value_at_p.inverse(),
            -self.teich_exponent,
            self.value_at_gamma.inverse(),
        )

    def __pow__(self, n: int):
        return Character(
            self.value_at_p**n,
            n * self.teich_exponent,
            self.value_at_gamma**n,
        )

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        self._check(other)
        return (
            self.teich_exponent == other.teich_exponent
            and self.value_at_p == other.value_at_p
            and self.value_at_gamma == other.value_at_gamma
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"Character(p -> {self.value_at_p!r}, "
            f"teich^{self.teich_exponent}, "
            f"gamma0 -> {self.value_at_gamma!r})"
        )

    # -- structure ----------------------------------------------------

    def lift(self, ctx: DeformationContext) -> "Character":
        """Canonical lift of an E-valued character to B (zero tangents)."""
        if self.over_b:
            raise FieldMismatchError("already valued in B")
        if ctx.field != self.field:
            raise FieldMismatchError("context over a different field")
        return Character(
            ctx.from_field(self.value_at_p),
            self.teich_exponent,
            ctx.from_field(self.value_at_gamma),
        )

    def decompose(self):
        """Split a B-valued character as body-character times (1 + tangent part).

        Returns (delta0: E-valued Character, delta1: Homomorphism into m).
        The torsion never contributes to delta1: m is torsion-free.
        """
        if not self.over_b:
            raise InvalidArgumentError("decompose applies to B-valued characters")
        vp, vg = self.value_at_p, self.value_at_gamma
        delta0 = Character(vp.body, self.teich_exponent, vg.body)
        delta1 = Homomorphism(
            vp.tangent.div(vp.body), vg.tangent.div(vg.body)
        )
        return delta0, delta1

    def weight(self):
        """-log(value at gamma0)/log(gamma0); Q_p(1) gets Sen weight -1."""
        fld = self.field
        if self.over_b:
            vg = self.value_at_gamma
            body = iwasawa_log(vg.body) * fld.inv_log_gamma0
            tangent = vg.tangent.div(vg.body).scale(fld.inv_log_gamma0)
            return -DeformationElement(vg.ctx, body, tangent)
        return -(iwasawa_log(self.value_at_gamma) * fld.inv_log_gamma0)

    # -- evaluation ---------------------------------------------------

    def eval(self, q):
        """Value at a nonzero rational q, via the generator decomposition."""
        q = Fraction(q)
        if q == 0:
            raise InvalidArgumentError("characters are defined on Q_p^x only")
        fld = self.field
        p = fld.p
        n = _vp(q.numerator, p) - _vp(q.denominator, p)
        u0 = q / Fraction(p) ** n
        # torsion index of u0 with respect to the residue generator
        res = u0.numerator * pow(u0.denominator, -1, p) % p
        j = fld.discrete_log(res)
        tj = self.teich_exponent * j % (p - 1)
        teich_val = fld.teich_int(pow(fld.residue_generator, tj, p))
        # principal-unit exponent: log<u0> / log(gamma0), an element of Z_p
        u = fld.from_rational(u0)
        expo = iwasawa_log(u) * fld.inv_log_gamma0
        out = self.value_at_p**n
        if self.over_b:
            ctx = self.ctx
            out = out * ctx.from_field(teich_val)
            out = out * _defelt_zp_pow(self.value_at_gamma, expo)
        else:
            out = out * teich_val
            out = out * _unit_zp_pow(self.value_at_gamma, expo)
        return out


def _unit_zp_pow(u: FieldElement, e: FieldElement) -> FieldElement:
    """u^e for a principal unit u and p-adic integer e, through exp/log."""
    return p_exp(iwasawa_log(u) * e)


def _defelt_zp_pow(x: DeformationElement, e: FieldElement) -> DeformationElement:
    """x^e for x with principal-unit body; (1+nu)^e = 1 + e*nu on tangents."""
    body = _unit_zp_pow(x.body, e)
    nu = x.tangent.div(x.body)
    return DeformationElement(x.ctx, body, nu.scale(e * body))


def char_make(value_at_p, teich_exponent, value_at_gamma) -> Character:
    """Validated character constructor.

    The value at gamma0 must be a principal unit (principal-unit body over
    B); anything else cannot come from a continuous character on 1 + pZ_p.
    """
    chi = Character(value_at_p, teich_exponent, value_at_gamma)
    vg = chi.value_at_gamma
    body = vg.body if chi.over_b else vg
    diff = body - chi.field.one()
    v = diff.valuation()
    if v is not None and v < 1:
        raise DiscontinuousCharacterError(
            "value at gamma0 is not a principal unit"
        )
    vp = chi.value_at_p
    pbody = vp.body if chi.over_b else vp
    if pbody.valuation() is None:
        raise DiscontinuousCharacterError("value at p must be invertible")
    return chi


# -- built-in characters ----------------------------------------------


def identity_char(field: UnramifiedField) -> Character:
    """The identity character x."""
    return Character(field.from_int(field.p), 1, field.from_int(field.gamma0))


def abs_char(field: UnramifiedField) -> Character:
    """The p-adic absolute value |x|: sends p to 1/p, trivial on units."""
    return Character(
        field.from_rational(Fraction(1, field.p)), 0, field.one()
    )


def trivial_char(field: UnramifiedField) -> Character:
    return Character(field.one(), 0, field.one())


def semistable_twist_char(field: UnramifiedField, k: int) -> Character:
    """(x*|x|) * x^k: the twist pattern of the semistable case."""
    return Character(
        field.from_rational(Fraction(field.p) ** k),
        k + 1,
        field.from_rational(Fraction(field.gamma0) ** (k + 1)),
    )


# -- classification ----------------------------------------------------


@dataclass(frozen=True)
class CharacterCase:
    """Tag for the twist-pattern trichotomy of an ordered character pair."""

    kind: str  # "first" | "second" | "third"
    k: int | None = None

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}({self.k})"


def classify_pair(delta0: Character, eta0: Character, k_max: int = 100) -> CharacterCase:
    """Which twist pattern, if any, relates eta0 to delta0.

    second(k): eta0 = (x*|x|) x^k delta0;  third(k): eta0 = x^(-k) delta0;
    otherwise first.  Recognition failures fall through to first.
    """
    fld = delta0.field
    rho = eta0 * delta0.inverse()
    w = rho.weight()
    gamma = Fraction(fld.gamma0)
    p = Fraction(fld.p)
    m = recognize_integer(-w, k_max + 1)
    if m is not None and m >= 1:
        k = m - 1
        if (
            rho.teich_exponent == (k + 1) % (fld.p - 1)
            and rho.value_at_p == fld.from_rational(p**k)
            and rho.value_at_gamma == fld.from_rational(gamma ** (k + 1))
        ):
            return CharacterCase("second", k)
    m = recognize_integer(w, k_max)
    if m is not None and m >= 0:
        k = m
        if (
            rho.teich_exponent == (-k) % (fld.p - 1)
            and rho.value_at_p == fld.from_rational(p**-k)
            and rho.value_at_gamma == fld.from_rational(gamma**-k)
        ):
            return CharacterCase("third", k)
    return CharacterCase("first")
