"""First-order deformation algebra B = E + m with square-zero ideal m.

B is a dual-number-style algebra over the base field E: elements carry a
body in E and a tangent in m = E^r.  Products of tangents vanish
identically, so every identity here is first-order exact.
"""

from __future__ import annotations

from .errors import FieldMismatchError, NotAUnitError
from .padic import FieldElement, UnramifiedField, iwasawa_log


class DeformationContext:
    """A base field together with the dimension r of the square-zero ideal."""

    def __init__(self, field: UnramifiedField, dim: int = 1):
        if dim < 1:
            raise FieldMismatchError("deformation ideal must have dim >= 1")
        self.field = field
        self.dim = dim

    def __eq__(self, other):
        return (
            isinstance(other, DeformationContext)
            and self.field == other.field
            and self.dim == other.dim
        )

    def __hash__(self):
        return hash((self.field, self.dim))

    def __repr__(self):
        return f"B = E + m over {self.field!r}, dim m = {self.dim}"

    def mvector(self, entries) -> "MVector":
        ents = tuple(
            e if isinstance(e, FieldElement) else self.field.from_rational(e)
            for e in entries
        )
        if len(ents) != self.dim:
            raise FieldMismatchError(f"expected {self.dim} tangent components")
        return MVector(self, ents)

    def zero_mvector(self) -> "MVector":
        return MVector(self, (self.field.zero(),) * self.dim)

    def element(self, body, tangent=None) -> "DeformationElement":
        if not isinstance(body, FieldElement):
            body = self.field.from_rational(body)
        if tangent is None:
            tangent = self.zero_mvector()
        elif not isinstance(tangent, MVector):
            tangent = self.mvector(tangent)
        return DeformationElement(self, body, tangent)

    def from_field(self, body) -> "DeformationElement":
        return self.element(body)

    def one(self) -> "DeformationElement":
        return self.element(self.field.one())


class MVector:
    """Element of m = E^r (also serving as the module of differentials)."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: DeformationContext, entries: tuple):
        self.ctx = ctx
        self.entries = entries

    def _check(self, other: "MVector"):
        if self.ctx != other.ctx:
            raise FieldMismatchError("tangent vectors from different contexts")

    def __add__(self, other):
        self._check(other)
        return MVector(
            self.ctx, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other):
        self._check(other)
        return MVector(
            self.ctx, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self):
        return MVector(self.ctx, tuple(-a for a in self.entries))

    def scale(self, c: FieldElement) -> "MVector":
        return MVector(self.ctx, tuple(a * c for a in self.entries))

    def div(self, c: FieldElement) -> "MVector":
        cinv = c.inverse()
        return MVector(self.ctx, tuple(a * cinv for a in self.entries))

    def is_zero_mod(self, n: int) -> bool:
        return all(a.is_zero_mod(n) for a in self.entries)

    def __eq__(self, other):
        if not isinstance(other, MVector):
            return NotImplemented
        self._check(other)
        return all(a == b for a, b in zip(self.entries, other.entries))

    __hash__ = None

    def __repr__(self):
        return "(" + ", ".join(repr(e) for e in self.entries) + ")"


class DeformationElement:
    """Element (body, tangent) of B, multiplied with tangent*tangent = 0."""

    __slots__ = ("ctx", "body", "tangent")

    def __init__(self, ctx: DeformationContext, body: FieldElement, tangent: MVector):
        self.ctx = ctx
        self.body = body
        self.tangent = tangent

    def _check(self, other: "DeformationElement"):
        if self.ctx != other.ctx:
            raise FieldMismatchError("elements of different deformation contexts")

    def __add__(self, other):
        self._check(other)
        return DeformationElement(
            self.ctx, self.body + other.body, self.tangent + other.tangent
        )

    def __sub__(self, other):
        self._check(other)
        return DeformationElement(
            self.ctx, self.body - other.body, self.tangent - other.tangent
        )

    def __neg__(self):
        return DeformationElement(self.ctx, -self.body, -self.tangent)

    def __mul__(self, other):
        self._check(other)
        return DeformationElement(
            self.ctx,
            self.body * other.body,
            self.tangent.scale(other.body) + other.tangent.scale(self.body),
        )

    def inverse(self) -> "DeformationElement":
        if self.body.valuation() is None:
            raise NotAUnitError("body is zero at working precision")
        binv = self.body.inverse()
        return DeformationElement(
            self.ctx, binv, self.tangent.scale(-(binv * binv))
        )

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.ctx.one()
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero_mod(self, n: int) -> bool:
        return self.body.is_zero_mod(n) and self.tangent.is_zero_mod(n)

    def __eq__(self, other):
        if not isinstance(other, DeformationElement):
            return NotImplemented
        self._check(other)
        return self.body == other.body and self.tangent == other.tangent

    __hash__ = None

    def __repr__(self):
        return f"({self.body!r}; {self.tangent!r})"


def kahler_d(a: DeformationElement) -> MVector:
    """The universal derivative: kills the body, keeps the tangent."""
    return a.tangent


def dlog(a: DeformationElement) -> MVector:
    """d(a)/a for invertible a; a homomorphism from units to (m, +)."""
    if a.body.valuation() is None:
        raise NotAUnitError("dlog needs an invertible element")
    return a.tangent.div(a.body)


def b_log(a: DeformationElement) -> DeformationElement:
    """Logarithm on B^x extending the branch with log(p) = 0.

    The body gets the Iwasawa logarithm; the tangent of log is d(a)/a.
    """
    if a.body.valuation() is None:
        raise NotAUnitError("b_log needs an invertible element")
    return DeformationElement(a.ctx, iwasawa_log(a.body), dlog(a))
