#!/usr/bin/env python3
"""Tabulate the all-unit Rado numbers r2(n, k) with provenance tags.

    python scripts/make_table.py --n-max 20 --k-max 20 --format csv --out table.csv
"""

import argparse
import csv
import json
import sys

from rado2 import rado_unit


def build_rows(n_max, k_max):
    rows = []
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            if n + k < 3:
                continue
            result = rado_unit(n, k)
            rows.append({"n": n, "k": k, "value": result.value,
                         "provenance": result.provenance})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=15)
    ap.add_argument("--k-max", type=int, default=15)
    ap.add_argument("--format", choices=("json", "csv"), default="csv")
    ap.add_argument("--out", help="output path (default stdout)")
    args = ap.parse_args()

    rows = build_rows(args.n_max, args.k_max)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.DictWriter(fh, fieldnames=["n", "k", "value", "provenance"])
            writer.writeheader()
            writer.writerows(rows)
        else:
            for row in rows:
                fh.write(json.dumps(row) + "\n")
    finally:
        if args.out:
            fh.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
