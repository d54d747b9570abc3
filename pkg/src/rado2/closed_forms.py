"""Closed-form 2-color Rado numbers for unit-lhs equations with one weighted
right-hand variable:  x1 + ... + x_{m-1} = a*y.

The value is a piecewise function of (m, a).  Every branch is exact integer
arithmetic; fractional range boundaries like m <= 3a/2 + 1 are tested in
cross-multiplied form (here 2*(m-1) <= 3*a), so no floats appear anywhere.

Branch ranges, for a >= 2 (a = 1 is the classical all-unit case):

    m < a/2 + 1          not covered (no closed form here)
    a/2 + 1 <= m < 2a/3 + 1    tag Fact4   (values 4/5/6, three sporadic points)
    2a/3 + 1 <= m <= a         tag Fact3   (3 or 4; the point m = a = 3 gives 9)
    m = a + 1                  tag Fact2   (value 1: every singleton solves)
    a + 2 <= m <= 2a + 1       tag Fact2   (values 3/4/5 by parity / mod 3)
    m >= 2a + 2, or m >= 2a + 1 when 3 | a
                               tag Fact1 (a >= 3) or SchaalVestal2008 (a = 2),
                               value nested_ceiling(m, a)

The single point where two ranges overlap is m = 2a + 1 with 3 | a; both
branches give the same value there and the Fact1 tag is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

# Provenance tags are stable strings; they appear verbatim in JSON output.
BB1982 = "BB1982"
GUO_SUN_2008 = "GuoSun2008"
SCHAAL_VESTAL_2008 = "SchaalVestal2008"
FACT1 = "Fact1"
FACT2 = "Fact2"
FACT3 = "Fact3"
FACT4 = "Fact4"
THEOREM1 = "Theorem1"
THEOREM2 = "Theorem2"
THEOREM3 = "Theorem3"
THEOREM4_LOWER = "Theorem4-lower"
LEMMA_LOWER = "Lemma-lower"
SEARCH = "search"

PROVENANCE_TAGS = (
    BB1982, GUO_SUN_2008, SCHAAL_VESTAL_2008,
    FACT1, FACT2, FACT3, FACT4,
    THEOREM1, THEOREM2, THEOREM3, THEOREM4_LOWER, LEMMA_LOWER, SEARCH,
)

EXACT = "exact"
BOUNDS = "bounds"
NOT_COVERED = "not_covered"


@dataclass(frozen=True)
class RadoResult:
    """Outcome of a closed-form or theorem evaluation.

    kind "exact": value and exactly one provenance tag are set.
    kind "bounds": lower is set, upper may be None (unknown).
    kind "not_covered": reason explains which range was missed.
    """

    kind: str
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    provenance: str | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.kind == EXACT:
            if self.value is None or self.value < 1:
                raise ValueError("exact result needs a positive value")
            if self.provenance not in PROVENANCE_TAGS:
                raise ValueError(f"unknown provenance tag: {self.provenance!r}")
        elif self.kind == BOUNDS:
            if self.lower is None or self.lower < 1:
                raise ValueError("bounds result needs a positive lower bound")
            if self.upper is not None and self.upper < self.lower:
                raise ValueError(f"empty bounds interval [{self.lower}, {self.upper}]")
            if self.provenance not in PROVENANCE_TAGS:
                raise ValueError(f"unknown provenance tag: {self.provenance!r}")
        elif self.kind == NOT_COVERED:
            if not self.reason:
                raise ValueError("not_covered result needs a reason")
        else:
            raise ValueError(f"unknown result kind: {self.kind!r}")

    @staticmethod
    def exact(value: int, provenance: str) -> "RadoResult":
        return RadoResult(kind=EXACT, value=value, provenance=provenance)

    @staticmethod
    def bounds(lower: int, upper: int | None, provenance: str) -> "RadoResult":
        return RadoResult(kind=BOUNDS, lower=lower, upper=upper, provenance=provenance)

    @staticmethod
    def not_covered(reason: str) -> "RadoResult":
        return RadoResult(kind=NOT_COVERED, reason=reason)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT


def nested_ceiling(m: int, a: int) -> int:
    """ceil(((m-1)/a) * ceil((m-1)/a)) in exact integer arithmetic."""
    if m < 2 or a < 1:
        raise ValueError(f"need m >= 2 and a >= 1, got m={m}, a={a}")
    q = (m - 1 + a - 1) // a            # ceil((m-1)/a)
    return ((m - 1) * q + a - 1) // a   # ceil((m-1)*q / a)


def _fact2_value(m: int, a: int) -> int:
    # range a+2 <= m <= 2a+1, a >= 2
    if 2 * (m - 1) <= 3 * a:  # m <= 3a/2 + 1
        return 3 if (a - (m - 1)) % 2 == 0 else 4
    return 4 if (a - (m - 1)) % 3 == 0 else 5


def _fact3_value(m: int, a: int) -> int:
    # range 2a/3+1 <= m <= a; for a = 3 the range is the single point m = 3
    if a == 3:
        return 9
    return 3 if (a - (m - 1)) % 2 == 0 else 4


def _fact4_value(m: int, a: int) -> int:
    # range a/2+1 <= m < 2a/3+1 (forces a >= 4)
    if (a - (m - 1)) % 3 == 0:
        return 4
    if (m, a) == (3, 4):
        return 10
    if (m, a) == (4, 5):
        return 9
    if 10 <= a <= 14 and m == a - 4:
        return 6
    return 5


def _bb_value(m: int, a: int) -> int:
    return m * m - m - 1


def _one(m: int, a: int) -> int:
    return 1


def _in_fact1_range(m: int, a: int) -> bool:
    if a < 3:
        return False
    return m >= 2 * a + 1 if a % 3 == 0 else m >= 2 * a + 2


# Dispatch table: (tag, range predicate, value function).  r2 evaluation takes
# the first match; the audit in branch_matches reports every match.  Fact1 is
# listed before the Fact2 range so the overlap point reports the Fact1 tag.
_BRANCHES = (
    (BB1982, lambda m, a: a == 1, _bb_value),
    (FACT2, lambda m, a: a >= 2 and m == a + 1, _one),
    (FACT1, _in_fact1_range, nested_ceiling),
    (SCHAAL_VESTAL_2008, lambda m, a: a == 2 and m >= 6, nested_ceiling),
    (FACT2, lambda m, a: a >= 2 and a + 2 <= m <= 2 * a + 1, _fact2_value),
    (FACT3, lambda m, a: 3 * (m - 1) >= 2 * a and m <= a, _fact3_value),
    (FACT4, lambda m, a: 2 * (m - 1) >= a and 3 * (m - 1) < 2 * a, _fact4_value),
)


def rado_single_rhs(m: int, a: int) -> RadoResult:
    """2-color Rado number of x1 + ... + x_{m-1} = a*y, when a closed form covers (m, a).

    Exact for every m >= a/2 + 1 and for a = 1; NotCovered below that.
    """
    if m < 3:
        raise ValueError(f"need m >= 3 (at least two lhs variables), got m={m}")
    if a < 1:
        raise ValueError(f"need a >= 1, got a={a}")
    for tag, in_range, value_of in _BRANCHES:
        if in_range(m, a):
            return RadoResult.exact(value_of(m, a), tag)
    return RadoResult.not_covered(
        f"m={m}, a={a} has m < a/2 + 1, below the Fact4 range; no closed form applies"
    )


def branch_matches(m: int, a: int) -> list[tuple[str, int]]:
    """Every (tag, value) whose range covers (m, a); empty for the uncovered region.

    Used to audit that branch ranges partition the domain except for the one
    intended overlap, and that overlapping branches agree.
    """
    return [(tag, value_of(m, a)) for tag, in_range, value_of in _BRANCHES if in_range(m, a)]


def guo_sun(lhs_coeffs) -> int:
    """Rado number of a1*x1 + ... + a_{m-1}*x_{m-1} = y:  a*w^2 + w - a
    with a = min coefficient and w = coefficient sum."""
    coeffs = tuple(int(c) for c in lhs_coeffs)
    if len(coeffs) < 2:
        raise ValueError("need at least two lhs coefficients")
    if any(c < 1 for c in coeffs):
        raise ValueError(f"coefficients must be positive: {coeffs}")
    a, w = min(coeffs), sum(coeffs)
    return a * w * w + w - a
