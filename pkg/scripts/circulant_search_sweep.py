#!/usr/bin/env python3
"""Run the exhaustive circulant Hadamard search at every multiple of 4.

The order-4 hits are the only ones anywhere in range; everything else
either has no feasible weight at all or exhausts its candidates in vain.

Example:
    python scripts/circulant_search_sweep.py --max-order 32 --workers 4
"""

import argparse

from z2schur import hadamard as hd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=32)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print("order\tfeasible_weights\tcandidates\tfound\tms")
    orders = [1, 2] + list(range(4, args.max_order + 1, 4))
    for n in orders:
        res = hd.search_circulant_hadamard(n, workers=args.workers)
        found = " ".join(res.found) if res.found else "-"
        weights = ",".join(map(str, res.feasible_weights)) or "-"
        print(f"{n}\t{weights}\t{res.candidates_tested}\t{found}\t{res.runtime_ms}")


if __name__ == "__main__":
    main()
