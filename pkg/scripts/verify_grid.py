#!/usr/bin/env python3
"""Check the closed-form unit-equation values against the search oracle.

Runs compute_rado for every pair on the grid and compares with rado_unit,
printing one JSON row per pair and a summary line.  Exits nonzero when any
pair disagrees.

    python scripts/verify_grid.py --n-max 10 --k-max 10
    python scripts/verify_grid.py --n-max 12 --threads 4 --csv grid.csv
"""

import argparse
import csv
import json
import sys
import time

from rado2 import compute_rado, rado_unit, unit_equation

FIELDS = ["n", "k", "formula", "search", "agree", "nodes_explored", "timing_ms"]


def run_grid(n_max, k_max, threads):
    rows = []
    for n in range(2, n_max + 1):
        for k in range(2, min(n, k_max) + 1):
            expected = rado_unit(n, k).value
            t0 = time.perf_counter()
            outcome = compute_rado(unit_equation(n, k), max_r=expected + 1, threads=threads)
            ms = (time.perf_counter() - t0) * 1000
            rows.append({
                "n": n,
                "k": k,
                "formula": expected,
                "search": outcome.rado,
                "agree": outcome.rado == expected,
                "nodes_explored": outcome.nodes_explored,
                "timing_ms": round(ms, 3),
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--k-max", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--csv", help="also write the rows to a CSV file")
    args = ap.parse_args()

    rows = run_grid(args.n_max, args.k_max, args.threads)
    for row in rows:
        print(json.dumps(row))
    mismatches = [r for r in rows if not r["agree"]]
    total_ms = sum(r["timing_ms"] for r in rows)
    print(json.dumps({
        "pairs": len(rows),
        "mismatches": len(mismatches),
        "total_ms": round(total_ms, 1),
        "ok": not mismatches,
    }))

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=FIELDS)
            writer.writeheader()
            writer.writerows(rows)

    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
