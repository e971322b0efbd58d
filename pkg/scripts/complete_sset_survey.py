#!/usr/bin/env python3
"""Survey complete S-sets: actual counts per (n, a) against the two-set rule.

Prints one row per target weight with the discovered sets and flags every
(n, a) where the count differs from the predicted profile.  The first
break is at (6, 4); after that every 2a > n follows suit.

Example:
    python scripts/complete_sset_survey.py --max-n 14
    python scripts/complete_sset_survey.py --max-n 16 --violations-only
"""

import argparse

from z2schur import ssets as ss


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--violations-only", action="store_true")
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        for a in range(n + 1):
            found = ss.find_complete_ssets(n, a)
            predicted = ss.predicted_profile(n, a)
            agrees = len(found) == predicted["count"]
            if args.violations_only and agrees:
                continue
            mark = "" if agrees else "  <- count rule breaks"
            sets = "; ".join(
                f"{s.parity}{{{','.join(map(str, s.members))}}}" for s in found
            )
            print(f"n={n:2d} a={a:2d} found={len(found)} "
                  f"predicted={predicted['count']} {sets}{mark}")


if __name__ == "__main__":
    main()
