"""Command-line interface.

Subcommands: tate, classify, verify, char, linv.  Exit codes: 0 success,
2 input error, 3 verification failure.  LINV_PRECISION sets the default
working precision; flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import family
from .deformation import DeformationContext
from .errors import (
    CrystallineSpecializationError,
    InconsistentScenarioError,
    InvalidArgumentError,
    InvalidPolynomialError,
    LinvError,
    LiteralParseError,
    UnsupportedPrimeError,
    WrongCaseError,
    ZeroValuationError,
)
from .characters import classify_pair
from .cohomology import L_inv, dual_L_inv, tate_pair
from .literals import (
    parse_character,
    parse_hom,
    parse_kummer,
    parse_loose,
    parse_scenario,
)
from .padic import make_field

MIN_PRECISION = 8


def _default_precision() -> int:
    env = os.environ.get("LINV_PRECISION")
    return int(env) if env else 50


def _common_flags(sp, degree=True):
    sp.add_argument("--p", type=int, default=5, help="odd prime (default 5)")
    if degree:
        sp.add_argument(
            "--degree", type=int, default=1, help="unramified degree (default 1)"
        )
    sp.add_argument(
        "--precision",
        type=int,
        default=None,
        help="working precision in p-adic digits (default 50, or LINV_PRECISION)",
    )
    sp.add_argument(
        "--kmax", type=int, default=100, help="integer-recognition bound"
    )
    sp.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linv",
        description="Exact p-adic L-invariant computations and theorem verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tate", help="L-invariant of a Tate parameter")
    _common_flags(sp)
    sp.add_argument("--q", required=True, help="nonzero rational, ord != 0")

    sp = sub.add_parser("classify", help="twist-pattern case of a character pair")
    _common_flags(sp)
    sp.add_argument("--delta0", required=True, help="E-valued character literal")
    sp.add_argument("--eta0", required=True, help="E-valued character literal")

    sp = sub.add_parser("verify", help="verify the main identity on scenarios")
    _common_flags(sp)
    sp.add_argument("scenario", nargs="?", help="scenario JSON file")
    sp.add_argument("--random", action="store_true", help="generate scenarios")
    sp.add_argument("--count", type=int, default=1, help="number of random scenarios")
    sp.add_argument("--seed", type=int, default=0, help="generation seed")
    sp.add_argument("--r", type=int, default=1, help="tangent dimension")
    sp.add_argument("--k", type=int, default=0, help="twist exponent")

    sp = sub.add_parser("char", help="character algebra")
    _common_flags(sp)
    sp.add_argument(
        "op", choices=("mul", "inv", "pow", "weight", "decompose")
    )
    sp.add_argument("--a", required=True, help="character literal")
    sp.add_argument("--b", help="second character literal (mul)")
    sp.add_argument("--n", type=int, help="exponent (pow)")
    sp.add_argument("--r", type=int, default=1, help="tangent dimension (decompose)")

    sp = sub.add_parser("linv", help="invariants and the pairing on literals")
    _common_flags(sp)
    sp.add_argument("op", choices=("L_inv", "dual_L_inv", "pair"))
    sp.add_argument("--q", help="Kummer class literal {a: ..., b: ...}")
    sp.add_argument("--h", help="homomorphism literal {at_p: ..., at_gamma: ...}")
    return parser


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _get_field(args):
    precision = args.precision if args.precision is not None else _default_precision()
    if precision < MIN_PRECISION:
        raise LiteralParseError(f"precision must be >= {MIN_PRECISION}")
    degree = getattr(args, "degree", 1)
    return make_field(args.p, degree, precision=precision)


def _cmd_tate(args) -> int:
    field = _get_field(args)
    value = family.tate_L_invariant(Fraction(args.q), field)
    _emit(
        args,
        {"L_invariant": repr(value), "precision": field.precision},
        f"L-invariant: {value!r}",
    )
    return 0


def _cmd_classify(args) -> int:
    field = _get_field(args)
    delta0 = parse_character(args.delta0, field)
    eta0 = parse_character(args.eta0, field)
    case = classify_pair(delta0, eta0, args.kmax)
    _emit(args, {"case": str(case)}, str(case))
    return 0


def _cmd_verify(args) -> int:
    scenarios = []
    if args.random:
        for i in range(args.count):
            scenarios.append(
                family.scenario_generate(
                    args.seed + i,
                    args.p,
                    d=args.degree,
                    r=args.r,
                    k=args.k,
                    precision=(
                        args.precision
                        if args.precision is not None
                        else _default_precision()
                    ),
                )
            )
    elif args.scenario:
        with open(args.scenario) as fh:
            doc = json.load(fh)
        docs = doc if isinstance(doc, list) else [doc]
        scenarios = [parse_scenario(d) for d in docs]
    else:
        print("verify: need a scenario file or --random", file=sys.stderr)
        return 2
    reports = []
    failures = 0
    for s in scenarios:
        try:
            report = family.theorem_verify(s, args.kmax)
        except (
            WrongCaseError,
            CrystallineSpecializationError,
            InconsistentScenarioError,
        ) as exc:
            kind = type(exc).__name__
            reports.append(
                {"label": s.label, "error": kind, "message": str(exc)}
            )
            if args.format == "text":
                print(f"scenario {s.label or '<unlabeled>'}: ERROR {kind}: {exc}")
            failures += 1
            continue
        reports.append(report.to_dict())
        if args.format == "text":
            print(report.to_text())
        if not report.passed:
            failures += 1
    if args.format == "json":
        print(json.dumps(reports, indent=2, sort_keys=True))
    return 3 if failures else 0


def _cmd_char(args) -> int:
    field = _get_field(args)
    if args.op == "mul":
        if args.b is None:
            raise LiteralParseError("char mul needs --b")
        out = parse_character(args.a, field) * parse_character(args.b, field)
        text = repr(out)
        payload = {"character": text}
    elif args.op == "inv":
        out = parse_character(args.a, field).inverse()
        text = repr(out)
        payload = {"character": text}
    elif args.op == "pow":
        if args.n is None:
            raise LiteralParseError("char pow needs --n")
        out = parse_character(args.a, field) ** args.n
        text = repr(out)
        payload = {"character": text}
    elif args.op == "weight":
        w = parse_character(args.a, field).weight()
        text = f"weight: {w!r} (precision {field.precision})"
        payload = {"weight": repr(w), "precision": field.precision}
    else:  # decompose
        ctx = DeformationContext(field, args.r)
        chi = parse_character(args.a, field, ctx)
        chi0, chi1 = chi.decompose()
        text = f"body character: {chi0!r}\ntangent part:   {chi1!r}"
        payload = {"body": repr(chi0), "tangent": repr(chi1)}
    _emit(args, payload, text)
    return 0


def _cmd_linv(args) -> int:
    field = _get_field(args)
    if args.op == "L_inv":
        if args.q is None:
            raise LiteralParseError("L_inv needs --q")
        point = L_inv(parse_kummer(args.q, field))
        text = f"{point!r} (precision {field.precision})"
        payload = {"L_invariant": repr(point)}
    elif args.op == "dual_L_inv":
        if args.h is None:
            raise LiteralParseError("dual_L_inv needs --h")
        point = dual_L_inv(parse_hom(args.h, field))
        text = f"{point!r} (precision {field.precision})"
        payload = {"dual_L_invariant": repr(point)}
    else:  # pair
        if args.q is None or args.h is None:
            raise LiteralParseError("pair needs --q and --h")
        value = tate_pair(parse_kummer(args.q, field), parse_hom(args.h, field))
        text = f"pairing: {value!r} (precision {field.precision})"
        payload = {"pairing": repr(value)}
    _emit(args, payload, text)
    return 0


_DISPATCH = {
    "tate": _cmd_tate,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "char": _cmd_char,
    "linv": _cmd_linv,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (
        LiteralParseError,
        UnsupportedPrimeError,
        InvalidPolynomialError,
        InvalidArgumentError,
        ZeroValuationError,
        OSError,
        json.JSONDecodeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LinvError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
