#!/usr/bin/env python3
"""Batch verification sweep over primes, degrees and twist exponents.

Generates random noncrystalline scenarios for every (p, d, k) combination
and checks the coordinate identity on each one, reporting counts and
wall-clock time per cell.

    python3 scripts/sweep.py --count 25 --seed 0
"""

import argparse
import time

from linv import scenario_generate, theorem_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=25, help="scenarios per cell")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11])
    ap.add_argument("--degrees", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--twists", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--precision", type=int, default=50)
    args = ap.parse_args()

    total = passed = 0
    t0 = time.perf_counter()
    for p in args.primes:
        for d in args.degrees:
            for k in args.twists:
                cell_t0 = time.perf_counter()
                ok = 0
                for i in range(args.count):
                    s = scenario_generate(
                        args.seed + i, p, d=d, r=args.r, k=k,
                        precision=args.precision,
                    )
                    report = theorem_verify(s)
                    ok += report.passed
                dt = time.perf_counter() - cell_t0
                total += args.count
                passed += ok
                print(
                    f"p={p:>2} d={d} k={k}: {ok}/{args.count} passed"
                    f"  ({dt:.2f}s)"
                )
    dt = time.perf_counter() - t0
    print(f"\ntotal: {passed}/{total} passed in {dt:.2f}s")
    return 0 if passed == total else 1


if __name__ == "__main__":
    raise SystemExit(main())
