"""Exhaustive 2-coloring search oracle.

Independent of the closed forms: monochromatic-solution detection, Rado
number search with witness colorings, solution enumeration, and DIMACS CNF
export.  Achievable side totals are tracked as bitmasks (Python integers),
so the per-color solution test is one AND of two sumset masks.
"""

from __future__ import annotations

import multiprocessing
import sys
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .equations import Equation

RED = 0
BLUE = 1
_COLOR_NAMES = ("red", "blue")


@dataclass(frozen=True)
class Coloring:
    """2-coloring of the interval {1..r}; colors[i] is the color of value i+1."""

    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.r < 1:
            raise ValueError(f"need r >= 1, got {self.r}")
        if len(self.colors) != self.r:
            raise ValueError(f"{len(self.colors)} colors for interval of size {self.r}")
        if any(c not in (RED, BLUE) for c in self.colors):
            raise ValueError("colors must be RED (0) or BLUE (1)")

    @classmethod
    def from_red_set(cls, r: int, red_values) -> "Coloring":
        reds = set(red_values)
        return cls(r, tuple(RED if v in reds else BLUE for v in range(1, r + 1)))

    def color_of(self, v: int) -> int:
        return self.colors[v - 1]

    def values_of(self, color: int) -> list[int]:
        return [v for v in range(1, self.r + 1) if self.colors[v - 1] == color]

    def red_values(self) -> list[int]:
        return self.values_of(RED)

    def blue_values(self) -> list[int]:
        return self.values_of(BLUE)

    def swapped(self) -> "Coloring":
        return Coloring(self.r, tuple(1 - c for c in self.colors))

    def to_dict(self) -> dict:
        return {"r": self.r, "red": self.red_values(), "blue": self.blue_values()}


@dataclass(frozen=True)
class MonoSolution:
    color: int
    lhs_values: tuple[int, ...]
    rhs_values: tuple[int, ...]

    @property
    def color_name(self) -> str:
        return _COLOR_NAMES[self.color]


@dataclass(frozen=True)
class SearchOutcome:
    """Result of compute_rado.  When cutoff_hit, rado is None and lower_bound
    is the largest interval size verified to admit a valid coloring, plus one."""

    rado: int | None
    witness: Coloring | None
    nodes_explored: int
    cutoff_hit: bool
    lower_bound: int | None = None


def _sums_mask(values, coeffs) -> int:
    """Bitmask of all totals sum(c_i * v_i) with every v_i drawn from values."""
    acc = 1  # bit 0: empty prefix
    for c in coeffs:
        nxt = 0
        for v in values:
            nxt |= acc << (c * v)
        if not nxt:
            return 0
        acc = nxt
    return acc


def _layer_masks(values, coeffs) -> list[int]:
    """Prefix sumset masks: layers[i] covers the first i coefficients."""
    layers = [1]
    for c in coeffs:
        acc, nxt = layers[-1], 0
        for v in values:
            nxt |= acc << (c * v)
        layers.append(nxt)
    return layers


def _mask_bits(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out


def achievable_sums(values, coeffs) -> set[int]:
    """All totals sum(c_i * v_i) with values drawn (with repetition) from the set."""
    coeffs = tuple(coeffs)
    if not coeffs:
        raise ValueError("coefficient list must be nonempty")
    if any(c < 1 for c in coeffs):
        raise ValueError(f"coefficients must be positive: {coeffs}")
    vals = sorted(set(values))
    if any(v < 1 for v in vals):
        raise ValueError(f"values must be positive integers: {vals}")
    return _mask_bits(_sums_mask(vals, coeffs))


def _backwalk(total: int, values, coeffs, layers) -> tuple[int, ...]:
    # Recover one assignment reaching total, walking the layer masks backwards.
    out = []
    rem = total
    for i in range(len(coeffs), 0, -1):
        c = coeffs[i - 1]
        for v in values:
            s = rem - c * v
            if s >= 0 and (layers[i - 1] >> s) & 1:
                out.append(v)
                rem = s
                break
        else:  # pragma: no cover - unreachable when total is in layers[-1]
            raise AssertionError("no preimage while reconstructing a solution")
    out.reverse()
    return tuple(out)


def find_mono_solution(eq: Equation, coloring: Coloring) -> MonoSolution | None:
    """A monochromatic solution of eq under the coloring, or None.

    The returned assignment balances exactly: both sides reach the same total.
    """
    for color in (RED, BLUE):
        vals = coloring.values_of(color)
        if not vals:
            continue
        lhs_layers = _layer_masks(vals, eq.lhs_coeffs)
        rhs_layers = _layer_masks(vals, eq.rhs_coeffs)
        common = lhs_layers[-1] & rhs_layers[-1]
        if common:
            total = (common & -common).bit_length() - 1
            return MonoSolution(
                color=color,
                lhs_values=_backwalk(total, vals, eq.lhs_coeffs, lhs_layers),
                rhs_values=_backwalk(total, vals, eq.rhs_coeffs, rhs_layers),
            )
    return None


def has_mono_solution(eq: Equation, coloring: Coloring) -> bool:
    return find_mono_solution(eq, coloring) is not None


# -- Rado number search ----------------------------------------------------

def _class_clean(vals, lhs_coeffs, rhs_coeffs) -> bool:
    return (_sums_mask(vals, lhs_coeffs) & _sums_mask(vals, rhs_coeffs)) == 0


def _search_interval(lhs_coeffs, rhs_coeffs, r, prefix):
    """Lexicographically least valid coloring of {1..r} extending prefix.

    Valid means no color class contains a solution.  Returns
    (found, colors or None, nodes); nodes counts every attempted assignment,
    including the prefix replay.  RED is tried before BLUE, so the first
    complete coloring found is the lexicographic minimum (RED < BLUE).
    """
    nodes = 0
    classes = ([], [])
    for v, color in enumerate(prefix, start=1):
        cls = classes[color]
        cls.append(v)
        nodes += 1
        if not _class_clean(cls, lhs_coeffs, rhs_coeffs):
            return False, None, nodes

    colors = list(prefix)

    def extend(t):
        nonlocal nodes
        if t > r:
            return True
        for color in (RED, BLUE):
            cls = classes[color]
            cls.append(t)
            colors.append(color)
            nodes += 1
            if _class_clean(cls, lhs_coeffs, rhs_coeffs) and extend(t + 1):
                return True
            cls.pop()
            colors.pop()
        return False

    if extend(len(prefix) + 1):
        return True, tuple(colors), nodes
    return False, None, nodes


def _prefix_task(args):
    lhs_coeffs, rhs_coeffs, r, bits, depth = args
    prefix = (RED,) + tuple((bits >> (depth - 2 - j)) & 1 for j in range(depth - 1))
    return _search_interval(lhs_coeffs, rhs_coeffs, r, prefix)


_PARALLEL_MIN_R = 12
_PREFIX_DEPTH = 8


def _search_r(lhs_coeffs, rhs_coeffs, r, threads):
    if threads == 1 or r < _PARALLEL_MIN_R:
        return _search_interval(lhs_coeffs, rhs_coeffs, r, (RED,))
    # Deterministic fan-out: subtrees are fixed by an 8-value prefix and
    # consumed in lexicographic order, so the reported coloring is the same
    # lexicographic minimum the sequential search returns.  Only the node
    # count depends on scheduling (unfinished speculative tasks are dropped).
    depth = _PREFIX_DEPTH
    tasks = [(lhs_coeffs, rhs_coeffs, r, bits, depth) for bits in range(1 << (depth - 1))]
    nodes = 0
    with multiprocessing.Pool(processes=threads) as pool:
        for found, colors, task_nodes in pool.imap(_prefix_task, tasks, chunksize=4):
            nodes += task_nodes
            if found:
                return True, colors, nodes
    return False, None, nodes


def compute_rado(eq: Equation, max_r: int, threads: int = 1) -> SearchOutcome:
    """Least r such that every 2-coloring of {1..r} has a monochromatic solution.

    Grows r from 1; for each r a depth-first search over colorings with
    color(1) = RED (the only symmetry break) looks for a valid coloring,
    pruning any branch whose colored prefix already contains a solution.
    The Rado number is the first r whose tree exhausts with no valid leaf;
    the witness is the lexicographically least valid coloring of {1..r-1}
    (absent when the answer is 1).  If every r <= max_r admits a valid
    coloring the search reports cutoff_hit with lower_bound = max_r + 1 and
    the valid coloring of {1..max_r} as witness.

    (rado, witness, cutoff_hit) are deterministic and independent of the
    worker count; nodes_explored is deterministic only for threads=1.
    """
    if max_r < 1:
        raise ValueError(f"need max_r >= 1, got {max_r}")
    if threads < 1:
        raise ValueError(f"need threads >= 1, got {threads}")
    lhs_coeffs, rhs_coeffs = eq.lhs_coeffs, eq.rhs_coeffs
    if sys.getrecursionlimit() < max_r + 200:
        sys.setrecursionlimit(max_r + 200)
    total_nodes = 0
    prev_colors = None
    for r in range(1, max_r + 1):
        found, colors, nodes = _search_r(lhs_coeffs, rhs_coeffs, r, threads)
        total_nodes += nodes
        if not found:
            witness = Coloring(r - 1, prev_colors) if prev_colors is not None else None
            _check_witness(eq, witness)
            return SearchOutcome(
                rado=r, witness=witness, nodes_explored=total_nodes, cutoff_hit=False
            )
        prev_colors = colors
    witness = Coloring(max_r, prev_colors)
    _check_witness(eq, witness)
    return SearchOutcome(
        rado=None, witness=witness, nodes_explored=total_nodes,
        cutoff_hit=True, lower_bound=max_r + 1,
    )


def _check_witness(eq, witness):
    if witness is not None and has_mono_solution(eq, witness):
        raise RuntimeError(f"internal error: witness for {eq} has a monochromatic solution")


# -- solution enumeration and CNF export -----------------------------------

def _side_assignments(coeffs, r) -> dict[int, list[tuple[int, ...]]]:
    """Canonical value tuples of one side, grouped by total.

    Within each group of equal coefficients the values are nondecreasing;
    for an all-unit side that means the whole tuple is sorted.
    """
    positions_by_coeff: dict[int, list[int]] = {}
    for i, c in enumerate(coeffs):
        positions_by_coeff.setdefault(c, []).append(i)
    groups = []
    for c, positions in sorted(positions_by_coeff.items()):
        combos = [
            (vals, c * sum(vals))
            for vals in combinations_with_replacement(range(1, r + 1), len(positions))
        ]
        groups.append((positions, combos))
    by_total: dict[int, list[tuple[int, ...]]] = {}
    for choice in product(*(combos for _, combos in groups)):
        tup = [0] * len(coeffs)
        total = 0
        for (positions, _), (vals, subtotal) in zip(groups, choice):
            total += subtotal
            for p, v in zip(positions, vals):
                tup[p] = v
        by_total.setdefault(total, []).append(tuple(tup))
    return by_total


def enumerate_solutions(eq: Equation, r: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All solutions with values in {1..r}, one canonical representative each.

    A solution is a pair (lhs values, rhs values) aligned with the stored
    coefficient order; values are nondecreasing within equal-coefficient
    groups, and the list is sorted lexicographically.  Work grows like
    r**variables, so keep r small.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    lhs_by_total = _side_assignments(eq.lhs_coeffs, r)
    rhs_by_total = _side_assignments(eq.rhs_coeffs, r)
    out = []
    for total, lhs_tuples in lhs_by_total.items():
        rhs_tuples = rhs_by_total.get(total)
        if rhs_tuples:
            out.extend((lt, rt) for lt in lhs_tuples for rt in rhs_tuples)
    out.sort()
    return out


@dataclass
class CnfDocument:
    """Propositional encoding of "some valid coloring of {1..r} exists".

    One variable per integer v in {1..r}; literal v true means v is BLUE.
    Each solution contributes two clauses over its distinct values: not all
    RED and not all BLUE.  A unit clause fixes 1 = RED.  Satisfiable iff a
    valid coloring exists, i.e. iff r is below the Rado number.
    """

    num_vars: int
    clauses: list[tuple[int, ...]]
    comments: list[str]

    def to_dimacs(self) -> str:
        lines = [f"c {comment}" for comment in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, clause)) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def export_cnf(eq: Equation, r: int) -> CnfDocument:
    clauses: list[tuple[int, ...]] = []
    seen = set()

    def add(clause):
        if clause not in seen:
            seen.add(clause)
            clauses.append(clause)

    add((-1,))  # fix 1 = RED; valid colorings are closed under color swap
    for lhs_vals, rhs_vals in enumerate_solutions(eq, r):
        distinct = sorted(set(lhs_vals) | set(rhs_vals))
        add(tuple(distinct))                 # not all RED
        add(tuple(-v for v in distinct))     # not all BLUE
    return CnfDocument(
        num_vars=r,
        clauses=clauses,
        comments=[f"equation {eq.text()}", f"interval 1..{r}"],
    )


def parse_dimacs(text: str) -> CnfDocument:
    """Inverse of CnfDocument.to_dimacs, for round-trip checks."""
    comments: list[str] = []
    clauses: list[tuple[int, ...]] = []
    num_vars = 0
    declared = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[2:] if line.startswith("c ") else line[1:])
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        lits = [int(tok) for tok in line.split()]
        if not lits or lits[-1] != 0:
            raise ValueError(f"clause line not zero-terminated: {line!r}")
        clauses.append(tuple(lits[:-1]))
    if declared is not None and declared != len(clauses):
        raise ValueError(f"declared {declared} clauses, found {len(clauses)}")
    return CnfDocument(num_vars=num_vars, clauses=clauses, comments=comments)
