"""Command line interface.

Subcommands: closed-form, number, search, verify, witness, table, sat.
Output is JSON, one object per line; tables can also be CSV.  Exit codes:
0 for exact/bounds results, 1 when a result is not covered or a search hit
its cutoff, 2 for input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass

from .closed_forms import (
    GUO_SUN_2008,
    LEMMA_LOWER,
    RadoResult,
    SEARCH,
    THEOREM1,
    guo_sun,
    rado_single_rhs,
)
from .equations import (
    Equation,
    GuoSunForm,
    UnitBothSides,
    UnitLhsSingleRhs,
    UnitLhsWeightedRhs,
    classify,
    unit_equation,
)
from .rado_theorems import rado_general, rado_unit
from .search import SearchOutcome, compute_rado, export_cnf
from .witnesses import LEMMA_COLORING, applicable_witnesses

EXIT_OK = 0
EXIT_INCOMPLETE = 1
EXIT_INPUT = 2

MAX_R_ENV = "RADO_MAX_R"
FALLBACK_MAX_R = 64


@dataclass(frozen=True)
class OutputRecord:
    query: dict
    result: dict
    witness: dict | None
    provenance: str | None
    timing_ms: float

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "result": self.result,
            "witness": self.witness,
            "provenance": self.provenance,
            "timing_ms": self.timing_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(
            query=d["query"],
            result=d["result"],
            witness=d["witness"],
            provenance=d["provenance"],
            timing_ms=d["timing_ms"],
        )


def result_to_dict(result: RadoResult) -> dict:
    if result.kind == "exact":
        return {"outcome": "exact", "value": result.value, "provenance": result.provenance}
    if result.kind == "bounds":
        return {
            "outcome": "bounds",
            "lower": result.lower,
            "upper": result.upper,
            "provenance": result.provenance,
        }
    return {"outcome": "not_covered", "reason": result.reason}


def outcome_to_dict(outcome: SearchOutcome) -> dict:
    return {
        "outcome": "search",
        "rado": outcome.rado,
        "lower_bound": outcome.lower_bound,
        "nodes_explored": outcome.nodes_explored,
        "cutoff_hit": outcome.cutoff_hit,
        "provenance": SEARCH,
    }


def resolve_equation(eq: Equation, _swapped: bool = False) -> RadoResult:
    """Route an equation to the closed forms via its structural class.

    Solutions are preserved under swapping the sides, so a General equation
    is retried once with the orientation reversed.
    """
    cls = classify(eq)
    if isinstance(cls, UnitBothSides):
        return rado_unit(cls.n, cls.k)
    if isinstance(cls, UnitLhsSingleRhs):
        return rado_general(cls.m - 1, eq.rhs_coeffs)
    if isinstance(cls, UnitLhsWeightedRhs) and cls.n >= 2:
        return rado_general(cls.n, eq.rhs_coeffs)
    if isinstance(cls, GuoSunForm):
        return RadoResult.exact(guo_sun(eq.lhs_coeffs), GUO_SUN_2008)
    if not _swapped:
        return resolve_equation(eq.swap_sides(), _swapped=True)
    return RadoResult.not_covered(
        f"no closed form covers the coefficient pattern of {eq.text()}"
    )


def _default_max_r(eq: Equation) -> int:
    """4x the best closed-form upper bound when one exists, else 64."""
    result = resolve_equation(eq)
    if result.is_exact:
        return 4 * result.value
    if result.kind == "bounds" and result.upper is not None:
        return 4 * result.upper
    return FALLBACK_MAX_R


def _pick_max_r(args, eq: Equation) -> int:
    if getattr(args, "max_r", None) is not None:
        return args.max_r
    env = os.environ.get(MAX_R_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{MAX_R_ENV} must be an integer, got {env!r}") from None
    return _default_max_r(eq)


def _emit(record: OutputRecord, out=None) -> None:
    print(json.dumps(record.to_dict()), file=out or sys.stdout)


def _exit_code_for(result: RadoResult) -> int:
    return EXIT_INCOMPLETE if result.kind == "not_covered" else EXIT_OK


# -- subcommand handlers -----------------------------------------------------

def cmd_closed_form(args) -> int:
    t0 = time.perf_counter()
    result = rado_single_rhs(args.m, args.a)
    ms = (time.perf_counter() - t0) * 1000
    record = OutputRecord(
        query={"command": "closed-form", "m": args.m, "a": args.a},
        result=result_to_dict(result),
        witness=None,
        provenance=result.provenance,
        timing_ms=round(ms, 3),
    )
    _emit(record)
    return _exit_code_for(result)


def cmd_number(args) -> int:
    if args.eq is not None:
        if args.n is not None or args.k is not None:
            raise ValueError("give either --eq or --n/--k, not both")
        eq = Equation.parse(args.eq)
        query = {"command": "number", "eq": eq.text()}
    else:
        if args.n is None or args.k is None:
            raise ValueError("need both --n and --k (or --eq)")
        eq = unit_equation(args.n, args.k)
        query = {"command": "number", "n": args.n, "k": args.k}

    t0 = time.perf_counter()
    result = resolve_equation(eq)
    witness = None
    if args.resolve and not result.is_exact:
        outcome = compute_rado(eq, max_r=_pick_max_r(args, eq), threads=args.threads)
        ms = (time.perf_counter() - t0) * 1000
        witness = None
        if outcome.witness is not None:
            witness = outcome.witness.to_dict()
            witness["name"] = SEARCH
            witness["certifies_lower_bound"] = outcome.witness.r + 1
        record = OutputRecord(
            query=query,
            result=outcome_to_dict(outcome),
            witness=witness,
            provenance=SEARCH,
            timing_ms=round(ms, 3),
        )
        _emit(record)
        return EXIT_INCOMPLETE if outcome.cutoff_hit else EXIT_OK
    ms = (time.perf_counter() - t0) * 1000
    record = OutputRecord(
        query=query,
        result=result_to_dict(result),
        witness=witness,
        provenance=result.provenance,
        timing_ms=round(ms, 3),
    )
    _emit(record)
    return _exit_code_for(result)


def cmd_search(args) -> int:
    eq = Equation.parse(args.eq)
    max_r = _pick_max_r(args, eq)
    t0 = time.perf_counter()
    outcome = compute_rado(eq, max_r=max_r, threads=args.threads)
    ms = (time.perf_counter() - t0) * 1000
    witness = None
    if outcome.witness is not None:
        witness = outcome.witness.to_dict()
        witness["name"] = SEARCH
        witness["certifies_lower_bound"] = outcome.witness.r + 1
    record = OutputRecord(
        query={"command": "search", "eq": eq.text(), "max_r": max_r},
        result=outcome_to_dict(outcome),
        witness=witness,
        provenance=SEARCH,
        timing_ms=round(ms, 3),
    )
    _emit(record)
    return EXIT_INCOMPLETE if outcome.cutoff_hit else EXIT_OK


def cmd_verify(args) -> int:
    mismatches = 0
    cutoffs = 0
    pairs = 0
    for n in range(2, args.n_max + 1):
        for k in range(2, min(n, args.k_max) + 1):
            pairs += 1
            expected = rado_unit(n, k).value
            t0 = time.perf_counter()
            outcome = compute_rado(unit_equation(n, k), max_r=expected, threads=args.threads)
            ms = (time.perf_counter() - t0) * 1000
            agree = not outcome.cutoff_hit and outcome.rado == expected
            row = {
                "n": n,
                "k": k,
                "formula": expected,
                "search": outcome.rado,
                "agree": agree,
                "cutoff_hit": outcome.cutoff_hit,
                "nodes_explored": outcome.nodes_explored,
                "timing_ms": round(ms, 3),
            }
            if not agree:
                mismatches += 1
                cutoffs += outcome.cutoff_hit
                row["witness"] = outcome.witness.to_dict() if outcome.witness else None
            print(json.dumps(row))
    print(json.dumps({"pairs": pairs, "mismatches": mismatches, "ok": mismatches == 0}))
    return EXIT_OK if mismatches == 0 else EXIT_INCOMPLETE


def cmd_witness(args) -> int:
    n, k = args.n, args.k
    t0 = time.perf_counter()
    if n == k:
        result = rado_unit(n, k)  # validates and returns exact 1
        ms = (time.perf_counter() - t0) * 1000
        record = OutputRecord(
            query={"command": "witness", "n": n, "k": k},
            result=result_to_dict(result),
            witness=None,
            provenance=result.provenance,
            timing_ms=round(ms, 3),
        )
        _emit(record)
        return EXIT_OK
    witnesses = applicable_witnesses(n, k)
    best = witnesses[0]
    tag = LEMMA_LOWER if best.name == LEMMA_COLORING else THEOREM1
    result = RadoResult.bounds(best.certifies_lower_bound, None, tag)
    ms = (time.perf_counter() - t0) * 1000
    record = OutputRecord(
        query={"command": "witness", "n": n, "k": k},
        result=result_to_dict(result),
        witness=best.to_dict(),
        provenance=tag,
        timing_ms=round(ms, 3),
    )
    _emit(record)
    return EXIT_OK


def cmd_table(args) -> int:
    rows = []
    for n in range(1, args.n_max + 1):
        for k in range(1, args.k_max + 1):
            if n + k < 3:
                continue
            result = rado_unit(n, k)
            rows.append(
                {"n": n, "k": k, "value": result.value, "provenance": result.provenance}
            )
    if args.format == "csv":
        def write_csv(fh):
            writer = csv.DictWriter(fh, fieldnames=["n", "k", "value", "provenance"])
            writer.writeheader()
            writer.writerows(rows)
        if args.out:
            with open(args.out, "w", newline="") as fh:
                write_csv(fh)
        else:
            write_csv(sys.stdout)
    else:
        lines = "\n".join(json.dumps(row) for row in rows) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(lines)
        else:
            sys.stdout.write(lines)
    return EXIT_OK


def cmd_sat(args) -> int:
    eq = Equation.parse(args.eq)
    if args.r < 1:
        raise ValueError(f"need --r >= 1, got {args.r}")
    doc = export_cnf(eq, args.r)
    text = doc.to_dimacs()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rado2",
        description="2-color Rado numbers of linear sum equations: closed forms and search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closed-form", help="piecewise value for x1+...+x_{m-1} = a*y")
    p.add_argument("--m", type=int, required=True, help="total variable count (lhs has m-1)")
    p.add_argument("--a", type=int, required=True, help="right-hand coefficient")
    p.set_defaults(handler=cmd_closed_form)

    p = sub.add_parser("number", help="Rado number or bounds for an equation")
    p.add_argument("--n", type=int, help="unit summands on the left")
    p.add_argument("--k", type=int, help="unit summands on the right")
    p.add_argument("--eq", help='equation text, e.g. "1,1,1=1,2"')
    p.add_argument("--resolve", action="store_true",
                   help="resolve bounds/not-covered outcomes with the search oracle")
    p.add_argument("--max-r", type=int, dest="max_r", help="search cutoff for --resolve")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=cmd_number)

    p = sub.add_parser("search", help="exhaustive search for the Rado number")
    p.add_argument("--eq", required=True, help='equation text, e.g. "1,1=1"')
    p.add_argument("--max-r", type=int, dest="max_r",
                   help=f"search cutoff (default: 4x closed-form value, else {FALLBACK_MAX_R}; "
                        f"env {MAX_R_ENV} overrides)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", help="closed forms vs search oracle on an (n, k) grid")
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--k-max", type=int, default=8, dest="k_max")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("witness", help="strongest applicable lower-bound coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("table", help="all-unit Rado number table")
    p.add_argument("--n-max", type=int, default=10, dest="n_max")
    p.add_argument("--k-max", type=int, default=10, dest="k_max")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("sat", help="DIMACS encoding of the valid-coloring question")
    p.add_argument("--eq", required=True)
    p.add_argument("--r", type=int, required=True, help="interval upper end")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_sat)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
