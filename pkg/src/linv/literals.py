"""Textual literals for scalars, field elements, characters, and scenarios.

Scalar forms: "a/b" (rational), "p^v*u" (power form, u a rational unit),
"[d0,d1,...]@v" (digit list, meaning p^v times sum d_i p^i).  Field
elements are lists of scalar literals in power-basis order.  Structured
literals ({a: ..., b: ...}) also accept bare keys on the command line, so
CLI users are not forced to quote JSON.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .characters import (
    Character,
    Homomorphism,
    abs_char,
    char_make,
    identity_char,
    trivial_char,
)
from .cohomology import KummerClass
from .deformation import DeformationContext, DeformationElement
from .errors import LiteralParseError
from .family import Scenario
from .padic import FieldElement, PadicScalar, UnramifiedField, make_field

_DIGIT_FORM = re.compile(r"^\[([^\]]*)\]@(-?\d+)$")
_POWER_FORM = re.compile(r"^(\d+)\^(-?\d+)(?:\*(.+))?$")


def parse_scalar(text, p: int, precision: int) -> PadicScalar:
    """Parse one p-adic scalar literal."""
    if isinstance(text, (int, Fraction)):
        return PadicScalar.from_rational(Fraction(text), p, precision)
    text = str(text).strip()
    m = _DIGIT_FORM.match(text)
    if m:
        try:
            digits = [int(d) for d in m.group(1).split(",") if d.strip() != ""]
        except ValueError as exc:
            raise LiteralParseError(f"bad digit list in {text!r}") from exc
        v = int(m.group(2))
        n = sum(d * p**i for i, d in enumerate(digits))
        return PadicScalar.from_rational(Fraction(n, 1) * Fraction(p) ** v, p, precision)
    m = _POWER_FORM.match(text)
    if m and int(m.group(1)) == p:
        v = int(m.group(2))
        u = Fraction(m.group(3)) if m.group(3) else Fraction(1)
        return PadicScalar.from_rational(u * Fraction(p) ** v, p, precision)
    try:
        return PadicScalar.from_rational(Fraction(text), p, precision)
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralParseError(f"cannot parse scalar literal {text!r}") from exc


def parse_field_element(value, field: UnramifiedField) -> FieldElement:
    """A scalar literal (constant) or a list of them in power-basis order."""
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, (list, tuple)):
        if len(value) != field.degree:
            raise LiteralParseError(
                f"expected {field.degree} coordinates, got {len(value)}"
            )
        return FieldElement(
            field,
            tuple(parse_scalar(v, field.p, field.precision) for v in value),
        )
    s = parse_scalar(value, field.p, field.precision)
    return field.from_scalar(s)


def parse_defelt(value, ctx: DeformationContext) -> DeformationElement:
    """{body: field-literal, tangent: [field-literal x r]}; bare literals
    mean a body with zero tangent."""
    if isinstance(value, dict):
        extra = set(value) - {"body", "tangent"}
        if extra:
            raise LiteralParseError(f"unknown deformation keys {sorted(extra)}")
        body = parse_field_element(value.get("body", 1), ctx.field)
        tangent = value.get("tangent")
        if tangent is None:
            return ctx.element(body)
        if not isinstance(tangent, (list, tuple)) or len(tangent) != ctx.dim:
            raise LiteralParseError(f"tangent must be a list of {ctx.dim} entries")
        return ctx.element(
            body, [parse_field_element(t, ctx.field) for t in tangent]
        )
    return ctx.element(parse_field_element(value, ctx.field))


_BUILTINS = {"x": identity_char, "abs": abs_char, "triv": trivial_char}


def parse_character(value, field: UnramifiedField, ctx: DeformationContext = None):
    """Character literal: built-ins, '*'-products, '^'-powers, or a
    {at_p, teich, at_gamma} record.  With a context, values are parsed
    over B; otherwise over E."""
    if isinstance(value, str) and value.lstrip()[:1] != "{":
        return _parse_char_product(value, field, ctx)
    if isinstance(value, str):
        value = parse_loose(value)
    if not isinstance(value, dict):
        raise LiteralParseError(f"cannot parse character literal {value!r}")
    extra = set(value) - {"at_p", "teich", "at_gamma"}
    if extra:
        raise LiteralParseError(f"unknown character keys {sorted(extra)}")
    teich = int(value.get("teich", 0))
    if ctx is None:
        at_p = parse_field_element(value.get("at_p", 1), field)
        at_gamma = parse_field_element(value.get("at_gamma", 1), field)
    else:
        at_p = parse_defelt(value.get("at_p", 1), ctx)
        at_gamma = parse_defelt(value.get("at_gamma", 1), ctx)
    return char_make(at_p, teich, at_gamma)


def _parse_char_product(text, field, ctx):
    out = None
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise LiteralParseError(f"empty factor in {text!r}")
        power = 1
        if "^" in factor:
            factor, _, exp = factor.partition("^")
            factor = factor.strip()
            try:
                power = int(exp)
            except ValueError as exc:
                raise LiteralParseError(f"bad exponent in {text!r}") from exc
        builder = _BUILTINS.get(factor)
        if builder is None:
            raise LiteralParseError(
                f"unknown character {factor!r}; built-ins are "
                + ", ".join(sorted(_BUILTINS))
            )
        chi = builder(field) ** power
        out = chi if out is None else out * chi
    if ctx is not None:
        out = out.lift(ctx)
    return out


def parse_kummer(value, field: UnramifiedField) -> KummerClass:
    if isinstance(value, str):
        value = parse_loose(value)
    if not isinstance(value, dict) or set(value) - {"a", "b"}:
        raise LiteralParseError("Kummer class literal must be {a: ..., b: ...}")
    return KummerClass(
        parse_field_element(value.get("a", 0), field),
        parse_field_element(value.get("b", 0), field),
    )


def parse_hom(value, field: UnramifiedField) -> Homomorphism:
    if isinstance(value, str):
        value = parse_loose(value)
    if not isinstance(value, dict) or set(value) - {"at_p", "at_gamma"}:
        raise LiteralParseError(
            "homomorphism literal must be {at_p: ..., at_gamma: ...}"
        )
    return Homomorphism(
        parse_field_element(value.get("at_p", 0), field),
        parse_field_element(value.get("at_gamma", 0), field),
    )


def parse_scenario(doc: dict) -> Scenario:
    """Scenario record: {p, degree?, poly?, precision?, r?, delta, eta,
    q0: {a, b}, label?}."""
    if not isinstance(doc, dict):
        raise LiteralParseError("scenario must be a JSON object")
    required = {"p", "delta", "eta", "q0"}
    missing = required - set(doc)
    if missing:
        raise LiteralParseError(f"scenario is missing keys {sorted(missing)}")
    field = make_field(
        int(doc["p"]),
        int(doc.get("degree", 1)),
        doc.get("poly"),
        precision=int(doc.get("precision", 50)),
    )
    ctx = DeformationContext(field, int(doc.get("r", 1)))
    return Scenario(
        ctx=ctx,
        delta=parse_character(doc["delta"], field, ctx),
        eta=parse_character(doc["eta"], field, ctx),
        q0=parse_kummer(doc["q0"], field),
        label=str(doc.get("label", "")),
    )


# -- lenient brace syntax ----------------------------------------------


def parse_loose(text: str):
    """Parse {key: value, ...} / [v, ...] with bare keys and bare values.

    Values stay strings (or nested dicts/lists); the typed parsers above
    interpret them.  This is the quoting-free syntax used on the CLI.
    """
    text = text.strip()
    value, rest = _loose_value(text)
    if rest.strip():
        raise LiteralParseError(f"trailing data in literal: {rest!r}")
    return value


def _loose_value(text: str):
    text = text.lstrip()
    if not text:
        raise LiteralParseError("empty literal")
    if text[0] == "{":
        return _loose_record(text)
    if text[0] == "[":
        return _loose_list(text)
    # bare token: up to the next top-level delimiter
    i = 0
    while i < len(text) and text[i] not in ",}]":
        i += 1
    token = text[:i].strip().strip('"')
    if not token:
        raise LiteralParseError(f"empty value in literal near {text!r}")
    return token, text[i:]


def _loose_record(text: str):
    out = {}
    rest = text[1:]
    while True:
        rest = rest.lstrip()
        if not rest:
            raise LiteralParseError("unterminated '{' literal")
        if rest[0] == "}":
            return out, rest[1:]
        key, sep, rest = rest.partition(":")
        if not sep:
            raise LiteralParseError(f"expected 'key:' near {rest!r}")
        key = key.strip().strip('"')
        value, rest = _loose_value(rest)
        out[key] = value
        rest = rest.lstrip()
        if rest[:1] == ",":
            rest = rest[1:]


def _loose_list(text: str):
    # digit-list scalars keep their bracket syntax intact
    if "@" in text:
        depth = 0
        for i, ch in enumerate(text):
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
                if depth == 0:
                    end = i + 1
                    if text[end : end + 1] == "@":
                        j = end + 1
                        while j < len(text) and (text[j] == "-" or text[j].isdigit()):
                            j += 1
                        return text[:j], text[j:]
                    break
    out = []
    rest = text[1:]
    while True:
        rest = rest.lstrip()
        if not rest:
            raise LiteralParseError("unterminated '[' literal")
        if rest[0] == "]":
            return out, rest[1:]
        value, rest = _loose_value(rest)
        out.append(value)
        rest = rest.lstrip()
        if rest[:1] == ",":
            rest = rest[1:]
