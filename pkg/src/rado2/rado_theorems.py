"""Rado numbers of all-unit equations and of unit-lhs equations with a
weighted right-hand side, reduced to the single-rhs closed forms.

rado_unit(n, k) is total: the all-unit equation always reduces (after an
orientation swap when n < k) to the single-rhs value at (max+1, min).
rado_general(n, coeffs) is exact whenever the coefficient sum A satisfies
A <= 2n and (n, A) is not one of the eight exceptional pairs; those pairs
get a bounds sandwich, and A > 2n gets the nested-ceiling lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import (
    BB1982,
    RadoResult,
    THEOREM1,
    THEOREM2,
    THEOREM3,
    THEOREM4_LOWER,
    nested_ceiling,
    rado_single_rhs,
)

# Pairs (n, A) where the all-unit value at (n, A) and the single-rhs value at
# (n+1, A) differ, so the reduction sandwich does not collapse.
EXCEPTIONAL_PAIRS = frozenset(
    {(2, 3), (2, 4), (3, 5), (5, 10), (6, 11), (7, 12), (8, 13), (9, 14)}
)


def rado_unit(n: int, k: int) -> RadoResult:
    """2-color Rado number of x1 + ... + xn = y1 + ... + yk.  Always exact.

    Symmetric in (n, k).  Value 1 iff n = k; the k = 1 column is the
    classical quadratic m*m - m - 1 at m = n + 1.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    if n + k < 3:
        raise ValueError("need at least 3 variables in total")
    if n == k:
        return RadoResult.exact(1, THEOREM1)
    swapped = n < k
    hi, lo = (k, n) if swapped else (n, k)
    if lo == 1:
        return RadoResult.exact(hi * hi + hi - 1, BB1982)
    inner = rado_single_rhs(hi + 1, lo)  # hi + 1 >= lo + 2, so always exact
    tag = THEOREM2 if swapped and 2 * n >= k else THEOREM1
    return RadoResult.exact(inner.value, tag)


@dataclass(frozen=True)
class ComparisonRecord:
    """All-unit value at (n, k) against the single-rhs value at (n+1, k)."""

    n: int
    k: int
    unit_value: int
    single_rhs_value: int
    agree: bool


def compare_unit_vs_single_rhs(n: int, k: int) -> ComparisonRecord:
    """Compare rado_unit(n, k) with rado_single_rhs(n+1, k) for 2n >= k > n >= 2.

    The whole range is covered by closed forms, so both numbers exist.
    agree is False exactly on the eight exceptional pairs.
    """
    if not (n >= 2 and k > n and 2 * n >= k):
        raise ValueError(f"need 2n >= k > n >= 2, got n={n}, k={k}")
    unit_value = rado_unit(n, k).value
    single = rado_single_rhs(n + 1, k)
    return ComparisonRecord(
        n=n, k=k, unit_value=unit_value, single_rhs_value=single.value,
        agree=single.value == unit_value,
    )


def rado_general(n: int, rhs_coeffs) -> RadoResult:
    """Rado number (or bounds) of x1 + ... + xn = b1*y1 + ... + bl*yl.

    All-unit right sides delegate to rado_unit.  A single right variable is
    the single-rhs form itself and keeps that branch's tag.  Otherwise with
    A = sum(b): exact via the reduction to (n+1, A) unless (n, A) is
    exceptional (bounds sandwich) or A > 2n (nested-ceiling lower bound).
    """
    coeffs = tuple(int(c) for c in rhs_coeffs)
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if not coeffs or any(c < 1 for c in coeffs):
        raise ValueError(f"rhs coefficients must be positive and nonempty: {coeffs}")
    A = sum(coeffs)
    if all(c == 1 for c in coeffs):
        return rado_unit(n, len(coeffs))
    if len(coeffs) == 1:
        direct = rado_single_rhs(n + 1, A)
        if direct.is_exact:
            return direct
        # A > 2n exactly when the closed form is not covered here
        return RadoResult.bounds(nested_ceiling(A + 1, n), None, THEOREM4_LOWER)
    if A <= n or (2 * n >= A and (n, A) not in EXCEPTIONAL_PAIRS):
        return RadoResult.exact(rado_single_rhs(n + 1, A).value, THEOREM3)
    if 2 * n >= A:  # exceptional pair, two or more weighted rhs variables
        lower = rado_unit(n, A).value
        upper = rado_single_rhs(n + 1, A).value
        return RadoResult.bounds(lower, upper, THEOREM3)
    return RadoResult.bounds(nested_ceiling(A + 1, n), None, THEOREM4_LOWER)
