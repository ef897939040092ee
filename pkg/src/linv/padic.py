"""Exact arithmetic in Q_p and unramified extensions at tracked precision.

Every value carries the precision its construction actually justifies: a
nonzero scalar is a unit times a power of p known to some number of digits,
and a value indistinguishable from zero is a distinct sentinel remembering
the modulus below which it is known to vanish.  Equality always means
congruence at the minimum precision available on the two sides.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import (
    FieldMismatchError,
    InvalidPolynomialError,
    LogOfZeroError,
    NotAUnitError,
    OutsideConvergenceDomainError,
    PadicDivisionError,
    UnsupportedPrimeError,
)

DEFAULT_PRECISION = 50


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _vp(n: int, p: int) -> int:
    """Valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _ilog(n: int, p: int) -> int:
    """floor(log_p n) for n >= 1."""
    k, m = 0, 1
    while m * p <= n:
        m *= p
        k += 1
    return k


_PPOW_CACHE: dict = {}


def _ppow(p: int, n: int) -> int:
    """Cached p**n; scalar arithmetic computes these in every operation."""
    key = (p, n)
    out = _PPOW_CACHE.get(key)
    if out is None:
        out = p**n
        _PPOW_CACHE[key] = out
    return out


class PadicScalar:
    """Element of Q_p at tracked precision.

    Nonzero: value = u * p**v + O(p**(v+r)), with u a unit mod p**r.
    Known-zero: u == 0, and r is the absolute precision bound (the value
    is O(p**r)).
    """

    __slots__ = ("p", "v", "u", "r")

    def __init__(self, p: int, v: int, u: int, r: int):
        self.p = p
        self.v = v
        self.u = u
        self.r = r

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(p: int, abs_prec: int) -> "PadicScalar":
        return PadicScalar(p, 0, 0, abs_prec)

    @staticmethod
    def _norm(p: int, v0: int, s: int, abs_prec: int) -> "PadicScalar":
        """Value s * p**v0 known modulo p**abs_prec."""
        rel = abs_prec - v0
        if rel <= 0:
            return PadicScalar.zero(p, abs_prec)
        s %= _ppow(p, rel)
        if s == 0:
            return PadicScalar.zero(p, abs_prec)
        w = _vp(s, p)
        return PadicScalar(p, v0 + w, (s // _ppow(p, w)) % _ppow(p, rel - w), rel - w)

    @staticmethod
    def from_int(n: int, p: int, prec: int) -> "PadicScalar":
        if n == 0:
            return PadicScalar.zero(p, prec)
        v = _vp(n, p)
        return PadicScalar(p, v, (n // _ppow(p, v)) % _ppow(p, prec), prec)

    @staticmethod
    def from_rational(q: Fraction, p: int, prec: int) -> "PadicScalar":
        q = Fraction(q)
        if q == 0:
            return PadicScalar.zero(p, prec)
        num, den = q.numerator, q.denominator
        vn, vd = _vp(num, p), _vp(den, p)
        m = _ppow(p, prec)
        u = ((num // _ppow(p, vn)) * pow(den // _ppow(p, vd), -1, m)) % m
        return PadicScalar(p, vn - vd, u, prec)

    # -- state --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.u == 0

    @property
    def abs_prec(self) -> int:
        return self.r if self.u == 0 else self.v + self.r

    def valuation(self):
        """Normalized valuation; None for the known-zero sentinel."""
        return None if self.u == 0 else self.v

    def is_zero_mod(self, n: int) -> bool:
        return self.r >= n if self.u == 0 else self.v >= n

    def lift(self) -> Fraction:
        """Canonical rational representative (0 for known-zero)."""
        if self.u == 0:
            return Fraction(0)
        if self.v >= 0:
            return Fraction(self.u * self.p**self.v)
        return Fraction(self.u, self.p**-self.v)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "PadicScalar"):
        if self.p != other.p:
            raise FieldMismatchError(f"primes differ: {self.p} vs {other.p}")

    def __add__(self, other):
        if not isinstance(other, PadicScalar):
            return NotImplemented
        self._check(other)
        a = min(self.abs_prec, other.abs_prec)
        if self.u == 0 and other.u == 0:
            return PadicScalar.zero(self.p, a)
        if self.u == 0:
            return PadicScalar._norm(other.p, other.v, other.u, a)
        if other.u == 0:
            return PadicScalar._norm(self.p, self.v, self.u, a)
        v0 = min(self.v, other.v)
        p = self.p
        s = self.u * _ppow(p, self.v - v0) + other.u * _ppow(p, other.v - v0)
        return PadicScalar._norm(p, v0, s, a)

    def __neg__(self):
        if self.u == 0:
            return self
        return PadicScalar(self.p, self.v, -self.u % _ppow(self.p, self.r), self.r)

    def __sub__(self, other):
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PadicScalar):
            return NotImplemented
        self._check(other)
        p = self.p
        if self.u == 0 or other.u == 0:
            # val(product) >= (valuation or zero-bound of each factor)
            b1 = self.r if self.u == 0 else self.v
            b2 = other.r if other.u == 0 else other.v
            return PadicScalar.zero(p, b1 + b2)
        r = min(self.r, other.r)
        return PadicScalar(p, self.v + other.v, self.u * other.u % _ppow(p, r), r)

    def __truediv__(self, other):
        if not isinstance(other, PadicScalar):
            return NotImplemented
        self._check(other)
        if other.u == 0:
            raise PadicDivisionError("division by a known-zero scalar")
        if self.u == 0:
            return PadicScalar.zero(self.p, self.r - other.v)
        r = min(self.r, other.r)
        m = _ppow(self.p, r)
        return PadicScalar(
            self.p, self.v - other.v, self.u * pow(other.u, -1, m) % m, r
        )

    def __pow__(self, n: int):
        if n < 0:
            base = PadicScalar(self.p, 0, 1, self.r or 1) / self
            return base ** (-n)
        if n == 0:
            return PadicScalar(self.p, 0, 1, max(self.r, 1))
        if self.u == 0:
            return PadicScalar.zero(self.p, n * self.r)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "PadicScalar":
        """Exact multiplication by p**k."""
        if self.u == 0:
            return PadicScalar.zero(self.p, self.r + k)
        return PadicScalar(self.p, self.v + k, self.u, self.r)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = PadicScalar.from_int(other, self.p, max(self.abs_prec, 1))
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return (self - other).u == 0

    __hash__ = None

    def __repr__(self):
        if self.u == 0:
            return f"O({self.p}^{self.r})"
        return f"{self.p}^{self.v}*{self.u} + O({self.p}^{self.v + self.r})"


# -- polynomial arithmetic over F_p (dense, low-to-high) ---------------


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _prem(a, b, p):
    a = [x % p for x in a]
    _ptrim(a)
    db = len(b) - 1
    binv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        f = a[-1] * binv % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _ptrim(a)
    return a


def _pgcd(a, b, p):
    a, b = [x % p for x in a], [x % p for x in b]
    _ptrim(a)
    _ptrim(b)
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _ppowmod(base, e, f, p):
    result = [1]
    base = _prem(base, f, p)
    while e:
        if e & 1:
            result = _prem(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _prem(_pmul(base, base, p), f, p)
    return result


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _ptrim(out)


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f, p):
    """Irreducibility of monic f over F_p (Rabin's test)."""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**d, f, p), x, p):
        return False
    for ell in _prime_factors(d):
        g = _pgcd(_psub(_ppowmod(x, p ** (d // ell), f, p), x, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


def _poly_inverse(a, f, p):
    """Inverse of a modulo monic irreducible f over F_p (extended Euclid)."""
    a = _ptrim([x % p for x in list(a)])
    if not a:
        raise NotAUnitError("zero residue has no inverse")
    r0, r1 = list(f), a
    s0, s1 = [], [1]
    while r1:
        # r0 = q*r1 + r2
        q = []
        r2 = [x % p for x in r0]
        _ptrim(r2)
        db = len(r1) - 1
        binv = pow(r1[-1], -1, p)
        qc = [0] * max(len(r2) - db, 1)
        while r2 and len(r2) - 1 >= db:
            fac = r2[-1] * binv % p
            sh = len(r2) - 1 - db
            qc[sh] = fac
            for i, c in enumerate(r1):
                r2[sh + i] = (r2[sh + i] - fac * c) % p
            _ptrim(r2)
        q = _ptrim(qc)
        r0, r1 = r1, r2
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    # r0 = gcd (a nonzero constant since f irreducible, a != 0)
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


# -- unramified extension fields ---------------------------------------


class UnramifiedField:
    """Descriptor for the unramified degree-d extension E of Q_p.

    Elements are power-basis coordinate vectors modulo a monic polynomial
    that is irreducible mod p.  The descriptor also holds lazily computed
    constants (log of the pro-p generator, Teichmuller lifts) that the
    higher-level modules reuse.
    """

    def __init__(self, p: int, degree: int, modulus: tuple, precision: int):
        self.p = p
        self.degree = degree
        self.modulus = tuple(modulus)
        self.precision = precision
        self.gamma0 = 1 + p
        self._int_cache = {}
        self._recip_cache = {}
        self._teich_cache = {}
        self._mod_scalars = None
        self._log_gamma0 = None
        self._inv_log_gamma0 = None
        self._residue_gen = None

    # identity-or-value equality: make_field caches descriptors, but
    # explicitly constructed duplicates should still interoperate
    def __eq__(self, other):
        return isinstance(other, UnramifiedField) and (
            (self.p, self.degree, self.modulus, self.precision)
            == (other.p, other.degree, other.modulus, other.precision)
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus, self.precision))

    def __repr__(self):
        if self.degree == 1:
            return f"Q_{self.p} (precision {self.precision})"
        return (
            f"unramified degree-{self.degree} extension of Q_{self.p} "
            f"(precision {self.precision})"
        )

    @property
    def slack(self) -> int:
        """Certification slack: identities are claimed mod p^(N - slack)."""
        n = self.precision
        k, m = 0, 1
        while m < n:
            m *= self.p
            k += 1
        return 2 + k

    @property
    def certified_prec(self) -> int:
        return self.precision - self.slack

    # -- element constructors -----------------------------------------

    def element(self, coeffs) -> "FieldElement":
        out = []
        for c in coeffs:
            if isinstance(c, PadicScalar):
                if c.p != self.p:
                    raise FieldMismatchError("scalar has a different prime")
                out.append(c)
            elif isinstance(c, int):
                out.append(PadicScalar.from_int(c, self.p, self.precision))
            else:
                out.append(
                    PadicScalar.from_rational(Fraction(c), self.p, self.precision)
                )
        if len(out) != self.degree:
            raise FieldMismatchError(
                f"expected {self.degree} coordinates, got {len(out)}"
            )
        return FieldElement(self, tuple(out))

    def zero(self, abs_prec=None) -> "FieldElement":
        a = self.precision if abs_prec is None else abs_prec
        z = PadicScalar.zero(self.p, a)
        return FieldElement(self, (z,) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        elt = self._int_cache.get(n)
        if elt is None:
            coeffs = [PadicScalar.from_int(n, self.p, self.precision)]
            coeffs += [PadicScalar.zero(self.p, self.precision)] * (self.degree - 1)
            elt = FieldElement(self, tuple(coeffs))
            if -256 <= n <= 256:
                self._int_cache[n] = elt
        return elt

    def from_rational(self, q) -> "FieldElement":
        coeffs = [PadicScalar.from_rational(Fraction(q), self.p, self.precision)]
        coeffs += [PadicScalar.zero(self.p, self.precision)] * (self.degree - 1)
        return FieldElement(self, tuple(coeffs))

    def from_scalar(self, s: PadicScalar) -> "FieldElement":
        return self.element([s] + [0] * (self.degree - 1))

    def scalar_recip(self, n: int) -> PadicScalar:
        """Cached 1/n as a scalar at working precision."""
        s = self._recip_cache.get(n)
        if s is None:
            s = PadicScalar.from_rational(Fraction(1, n), self.p, self.precision)
            self._recip_cache[n] = s
        return s

    def with_precision(self, precision: int) -> "UnramifiedField":
        return make_field(self.p, self.degree, self.modulus, precision)

    # -- cached constants ---------------------------------------------

    @property
    def mod_scalars(self):
        if self._mod_scalars is None:
            self._mod_scalars = tuple(
                PadicScalar.from_int(c, self.p, self.precision) if c else None
                for c in self.modulus
            )
        return self._mod_scalars

    @property
    def residue_generator(self) -> int:
        """Smallest primitive root mod p (generator of the residue units)."""
        if self._residue_gen is None:
            p = self.p
            factors = _prime_factors(p - 1)
            g = 2
            while any(pow(g, (p - 1) // q, p) == 1 for q in factors):
                g += 1
            self._residue_gen = g
        return self._residue_gen

    @property
    def log_gamma0(self) -> "FieldElement":
        if self._log_gamma0 is None:
            self._log_gamma0 = iwasawa_log(self.from_int(self.gamma0))
        return self._log_gamma0

    @property
    def inv_log_gamma0(self) -> "FieldElement":
        if self._inv_log_gamma0 is None:
            self._inv_log_gamma0 = self.log_gamma0.inverse()
        return self._inv_log_gamma0

    def teich_int(self, n: int) -> "FieldElement":
        """Cached Teichmuller lift of an integer unit."""
        m = n % self.p
        elt = self._teich_cache.get(m)
        if elt is None:
            elt = teichmuller(self.from_int(m))
            self._teich_cache[m] = elt
        return elt

    def discrete_log(self, n: int) -> int:
        """Index of a unit residue with respect to the residue generator."""
        g, p = self.residue_generator, self.p
        target = n % p
        acc = 1
        for j in range(p - 1):
            if acc == target:
                return j
            acc = acc * g % p
        raise NotAUnitError(f"{n} is not a unit mod {p}")


class FieldElement:
    """Element of an unramified extension in power-basis coordinates."""

    __slots__ = ("field", "coeffs", "_inv")

    def __init__(self, field: UnramifiedField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._inv = None

    def _check(self, other: "FieldElement"):
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatchError("elements of different fields")

    # -- state --------------------------------------------------------

    def valuation(self):
        """min over nonzero coordinate valuations; None if all known-zero.

        Coordinates that are known-zero only to low precision cannot hide
        a smaller valuation than the reported one in any of our pipelines
        (inputs are exact and bounds only shrink through division/series).
        """
        vals = [c.v for c in self.coeffs if c.u != 0]
        return min(vals) if vals else None

    @property
    def abs_prec(self) -> int:
        return min(c.abs_prec for c in self.coeffs)

    def is_zero_mod(self, n: int) -> bool:
        return all(c.is_zero_mod(n) for c in self.coeffs)

    def lift_coeffs(self):
        return [c.lift() for c in self.coeffs]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def mul_scalar(self, s: PadicScalar) -> "FieldElement":
        return FieldElement(self.field, tuple(a * s for a in self.coeffs))

    def div_scalar(self, s: PadicScalar) -> "FieldElement":
        return FieldElement(self.field, tuple(a / s for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PadicScalar):
            return self.mul_scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        fld = self.field
        d = fld.degree
        if d == 1:
            return FieldElement(fld, (self.coeffs[0] * other.coeffs[0],))
        conv = [None] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                t = a * b
                k = i + j
                conv[k] = t if conv[k] is None else conv[k] + t
        mods = fld.mod_scalars
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            for j in range(d):
                fj = mods[j]
                if fj is not None:
                    conv[i - d + j] = conv[i - d + j] - c * fj
        return FieldElement(fld, tuple(conv[:d]))

    def shift(self, k: int) -> "FieldElement":
        """Exact multiplication by p**k."""
        return FieldElement(self.field, tuple(c.shift(k) for c in self.coeffs))

    def inverse(self) -> "FieldElement":
        if self._inv is not None:
            return self._inv
        v = self.valuation()
        if v is None:
            raise PadicDivisionError("inverse of a known-zero element")
        unit = self.shift(-v)
        fld = self.field
        p = fld.p
        abar = [
            0 if (c.u == 0 or c.v > 0) else c.u % p for c in unit.coeffs
        ]
        fbar = [m % p for m in fld.modulus]
        inv0 = _poly_inverse(abar, fbar, p)
        inv0 += [0] * (fld.degree - len(inv0))
        x = fld.element(inv0)
        two = fld.from_int(2)
        for _ in range((fld.precision - 1).bit_length()):
            x = x * (two - unit * x)
        out = x.shift(-v)
        self._inv = out
        out._inv = self
        return out

    def __truediv__(self, other):
        if isinstance(other, PadicScalar):
            return self.div_scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.field.one()
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return all((a - b).u == 0 for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        if self.field.degree == 1:
            return repr(self.coeffs[0])
        return "[" + ", ".join(repr(c) for c in self.coeffs) + "]"


# -- field construction ------------------------------------------------


def _default_modulus(p: int, d: int) -> tuple:
    if d == 1:
        return (0, 1)
    for tail in product(range(p), repeat=d):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise InvalidPolynomialError(
        f"no irreducible monic polynomial of degree {d} mod {p} found"
    )  # pragma: no cover - cannot happen


@lru_cache(maxsize=None)
def _make_field_cached(p, d, f, precision):
    return UnramifiedField(p, d, f, precision)


def make_field(p: int, d: int = 1, f=None, precision: int = DEFAULT_PRECISION):
    """Descriptor for the unramified degree-d extension of Q_p.

    If f is omitted, the lexicographically smallest monic polynomial that
    is irreducible mod p is selected, so runs are reproducible.
    """
    if p == 2 or not _is_prime(p):
        raise UnsupportedPrimeError(f"p = {p}: need an odd rational prime")
    if d < 1:
        raise InvalidPolynomialError(f"degree must be >= 1, got {d}")
    if precision < 1:
        raise InvalidPolynomialError("precision must be positive")
    if f is None:
        f = _default_modulus(p, d)
    else:
        f = tuple(int(c) for c in f)
        if len(f) != d + 1 or f[-1] % p != 1:
            raise InvalidPolynomialError(
                f"need a monic polynomial of degree {d}"
            )
        if d > 1 and not _is_irreducible([c % p for c in f], p):
            raise InvalidPolynomialError("polynomial is reducible mod p")
    return _make_field_cached(p, d, f, precision)


# -- transcendental operations ----------------------------------------


def teichmuller(a: FieldElement) -> FieldElement:
    """The unique (p^d - 1)-th root of unity congruent to a mod p."""
    if a.valuation() != 0:
        raise NotAUnitError("Teichmuller lift needs a unit")
    q = a.field.p**a.field.degree
    x = a
    for _ in range(a.field.precision + 2):
        xn = x**q
        if xn == x:
            return xn
        x = xn
    return x  # pragma: no cover - loop bound always suffices


def _log1p(z: FieldElement) -> FieldElement:
    """log(1+z) by the alternating series, for valuation(z) >= 1."""
    fld = z.field
    n_work = fld.precision
    vz = z.valuation()
    if vz is None:
        return fld.zero(min(z.abs_prec, n_work))
    if vz < 1:
        raise OutsideConvergenceDomainError("log(1+z) needs val(z) >= 1")
    nmax = 1
    while nmax * vz - _ilog(nmax, fld.p) <= n_work + 2:
        nmax += 1
    total = z
    zpow = z
    for n in range(2, nmax + 1):
        zpow = zpow * z
        term = zpow.mul_scalar(fld.scalar_recip(n))
        total = total + term if n % 2 == 1 else total - term
    return total


def iwasawa_log(a: FieldElement) -> FieldElement:
    """p-adic logarithm on the branch with log(p) = 0 and log(roots of 1) = 0.

    The unit part is raised to the (p^d - 1)-th power, which kills the
    Teichmuller component, and the principal-unit series result is divided
    back out.
    """
    fld = a.field
    v = a.valuation()
    if v is None:
        raise LogOfZeroError("logarithm of a known-zero element")
    unit = a.shift(-v)
    q1 = fld.p**fld.degree - 1
    z = unit**q1 - fld.one()
    return _log1p(z).mul_scalar(fld.scalar_recip(q1))


def p_exp(a: FieldElement) -> FieldElement:
    """exp(a) = sum a^n / n!, for valuation(a) >= 1 (p odd, unramified)."""
    fld = a.field
    p, n_work = fld.p, fld.precision
    v = a.valuation()
    if v is None:
        return fld.one() + a
    if v < 1:
        raise OutsideConvergenceDomainError("exp needs valuation >= 1")
    step = Fraction(v) - Fraction(1, p - 1)
    nmax = int(Fraction(n_work + 2) / step) + 2
    total = fld.one() + a
    apow = a
    fact = PadicScalar.from_int(1, p, n_work)
    one_s = PadicScalar.from_int(1, p, n_work)
    for n in range(2, nmax + 1):
        apow = apow * a
        fact = fact * PadicScalar.from_int(n, p, n_work)
        total = total + apow.mul_scalar(one_s / fact)
    return total


def recognize_integer(a: FieldElement, k_max: int = 100, tol=None):
    """The integer k with |k| <= k_max that a equals at precision, or None."""
    fld = a.field
    if tol is None:
        tol = fld.certified_prec
    for c in a.coeffs[1:]:
        if not c.is_zero_mod(tol):
            return None
    c0 = a.coeffs[0]
    if c0.abs_prec < tol:
        return None
    if c0.is_zero_mod(tol):
        return 0
    if c0.v < 0:
        return None
    m = c0.u * fld.p**c0.v % fld.p**tol
    if m <= k_max:
        return m
    if fld.p**tol - m <= k_max:
        return m - fld.p**tol
    return None
