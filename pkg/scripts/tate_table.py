#!/usr/bin/env python3
"""Tabulate L-invariants of rational Tate parameters.

For each q in a small list of rational Tate parameters at a chosen prime,
prints ord_p(q), the Iwasawa logarithm of q, and L = log_p(q)/ord_p(q).

    python3 scripts/tate_table.py --p 11
"""

import argparse
from fractions import Fraction

from linv import iwasawa_log, make_field, tate_L_invariant


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=11)
    ap.add_argument("--precision", type=int, default=50)
    ap.add_argument(
        "--q", type=Fraction, nargs="+",
        default=None, help="Tate parameters (default: a built-in list)",
    )
    args = ap.parse_args()

    field = make_field(args.p, precision=args.precision)
    p = args.p
    qs = args.q or [
        Fraction(p), Fraction(p * (p + 1)), Fraction(p**2 * (p + 1)),
        Fraction(p**3, p - 1), Fraction(1, p),
    ]
    for q in qs:
        ordq = 0
        n, d = q.numerator, q.denominator
        while n % p == 0:
            n //= p
            ordq += 1
        while d % p == 0:
            d //= p
            ordq -= 1
        logq = iwasawa_log(field.from_rational(q))
        L = tate_L_invariant(q, field)
        print(f"q = {q}")
        print(f"  ord_p(q) = {ordq}")
        print(f"  log_p(q) = {logq!r}")
        print(f"  L        = {L!r}")


if __name__ == "__main__":
    main()
