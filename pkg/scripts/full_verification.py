#!/usr/bin/env python3
"""End-to-end exact verification run: residues, case analysis, theorem sweep.

Reproduces the whole classification argument at configurable scale and exits
nonzero if any check fails.  Example:

    python scripts/full_verification.py --h-span 100000 --k-span 1000000
"""

import argparse
import sys
import time

from milnor_mu.verify import (
    Case,
    brute_force_theorem,
    check_case,
    enumerate_residues,
    residues_by_crt,
    verify_range,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--h-span", type=int, default=100_000,
                        help="sweep h over [-H, H] (default 100000)")
    parser.add_argument("--k-span", type=int, default=1_000_000,
                        help="check cases over k in [-K, K] (default 10^6)")
    parser.add_argument("--crt-periods", type=int, default=100,
                        help="cross-check scan vs CRT for moduli 56m, m <= this")
    parser.add_argument("--parallel", type=int, default=None,
                        help="worker processes for the h sweep")
    args = parser.parse_args()

    failed = False

    t0 = time.perf_counter()
    base = enumerate_residues(56)
    print(f"residues mod 56 with 56 | r(r-1): {base.residues}")
    disagree = [m for m in range(1, args.crt_periods + 1)
                if enumerate_residues(56 * m) != residues_by_crt(56 * m)]
    if disagree:
        failed = True
        print(f"  !! scan vs CRT disagree at m = {disagree}")
    else:
        print(f"  scan agrees with CRT construction for all 56m, m <= {args.crt_periods}")

    print(f"case analysis over k in [-{args.k_span}, {args.k_span}]:")
    for case in Case:
        report = check_case(case, -args.k_span, args.k_span)
        mark = "ok" if report.matches else "FAIL"
        print(f"  case {case.name:>3} (h = 56k + {report.h_residue:>2}): "
              f"h(h-1)/112 = {report.quad_constant} + k/2, "
              f"(2h-1)/32 = {report.linear_constant} + k/2  [{mark}]")
        failed = failed or not report.matches

    sweep = brute_force_theorem(-args.h_span, args.h_span)
    print(f"direct-formula sweep over [-{args.h_span}, {args.h_span}]: "
          f"{sweep.checked} admissible h, {sweep.failed} failures")
    failed = failed or sweep.failed > 0

    rows = verify_range(-args.h_span, args.h_span, workers=args.parallel)
    bad = [r.h for r in rows if not r.passed]
    print(f"oracle-vs-pipeline sweep: {len(rows)} rows, {len(bad)} disagreements")
    failed = failed or bool(bad)

    print(f"total {time.perf_counter() - t0:.1f}s: "
          f"{'FAILED' if failed else 'all checks passed'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
