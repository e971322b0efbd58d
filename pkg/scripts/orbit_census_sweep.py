#!/usr/bin/env python3
"""Tabulate orbit counts for every symmetry group over a range of lengths.

Example:
    python scripts/orbit_census_sweep.py --min-n 2 --max-n 12
    python scripts/orbit_census_sweep.py --max-n 10 --group DC --periods
"""

import argparse

from z2schur import orbits as ob


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--group", choices=ob.GROUPS, default=None,
                    help="restrict to one group (default: all)")
    ap.add_argument("--periods", action="store_true",
                    help="also print the per-period breakdown")
    args = ap.parse_args()

    groups = [args.group] if args.group else list(ob.GROUPS)
    header = ["n"] + groups
    print("\t".join(header))
    for n in range(args.min_n, args.max_n + 1):
        cells = [str(n)]
        for g in groups:
            rep = ob.census(n, g)
            cells.append(str(rep["total"]))
            assert rep["total"] == ob.burnside_count(n, g)
        print("\t".join(cells))
        if args.periods:
            rep = ob.census(n, groups[0])
            pairs = ", ".join(f"{p}:{c}" for p, c in sorted(rep["by_period"].items()))
            print(f"    periods[{groups[0]}] {pairs}")


if __name__ == "__main__":
    main()
