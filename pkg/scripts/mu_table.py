#!/usr/bin/env python3
"""Browse the family: mu, exotic class, and quotient verdict per h.

    python scripts/mu_table.py --h-range -7..10
"""

import argparse
import re
import sys

from milnor_mu.bundles import MilnorBundle, is_diffeo_s7, mu_total_space, theta7_class
from milnor_mu.quotient import classify_quotient


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    # accept values like -7..10 without mistaking them for flags
    parser._negative_number_matcher = re.compile(r"^-\d+$|^-\d+\.\.-?\d+$")
    parser.add_argument("--h-range", default="-7..10", metavar="A..B",
                        help="inclusive h interval (default -7..10)")
    args = parser.parse_args()
    lo, _, hi = args.h_range.partition("..")
    header = f"{'h':>8}  {'mu(M_h)':>10}  {'theta7':>6}  {'S^7?':>5}  quotient"
    print(header)
    print("-" * len(header))
    for h in range(int(lo), int(hi) + 1):
        b = MilnorBundle(h)
        report = classify_quotient(b)
        mu = report.mu_quotient
        quotient = report.verdict.value if mu is None else f"{report.verdict.value} {mu}"
        print(f"{h:>8}  {str(mu_total_space(b).rep):>10}  {theta7_class(b):>6}  "
              f"{'yes' if is_diffeo_s7(b) else 'no':>5}  {quotient}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
