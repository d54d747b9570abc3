"""Named lower-bound colorings for the all-unit equation x1+...+xn = y1+...+yk.

Each witness is a concrete 2-coloring of an initial interval {1..r} with no
monochromatic solution (when its applicability predicate holds), which
certifies that the Rado number is at least r + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import nested_ceiling
from .equations import Equation, unit_equation
from .search import Coloring

LEMMA_COLORING = "LemmaColoring"
PARITY_COLORING_3 = "ParityColoring3"
MOD3_COLORING_4 = "Mod3Coloring4"


@dataclass(frozen=True)
class WitnessColoring:
    name: str
    coloring: Coloring
    applicable: bool
    applicable_when: str
    claims_no_mono_for: Equation
    certifies_lower_bound: int

    def to_dict(self) -> dict:
        d = self.coloring.to_dict()
        d["name"] = self.name
        d["certifies_lower_bound"] = self.certifies_lower_bound
        return d


def lemma_coloring(n: int, k: int) -> WitnessColoring:
    """Small-values-red coloring of {1 .. nested_ceiling(n+1,k) - 1} for n > k.

    RED = {1 .. ceil(n/k) - 1}, BLUE = the rest.  The red side sum of n
    values falls short of any red right side, and symmetrically for blue,
    so no monochromatic solution exists and the Rado number is at least
    nested_ceiling(n+1, k).
    """
    if k < 1 or n <= k:
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    q = (n + k - 1) // k  # ceil(n/k) >= 2 since n > k
    size = nested_ceiling(n + 1, k) - 1
    coloring = Coloring.from_red_set(size, range(1, q))
    return WitnessColoring(
        name=LEMMA_COLORING,
        coloring=coloring,
        applicable=True,
        applicable_when="n > k >= 1",
        claims_no_mono_for=unit_equation(n, k),
        certifies_lower_bound=size + 1,
    )


def parity_coloring_3() -> Coloring:
    """RED = {1, 3}, BLUE = {2} on {1..3}."""
    return Coloring.from_red_set(3, {1, 3})


def applies_parity(n: int, k: int) -> bool:
    """When the parity coloring of {1..3} avoids monochromatic solutions:
    k + 1 <= n <= 3k/2 and n, k of opposite parity."""
    return k + 1 <= n and 2 * n <= 3 * k and (n - k) % 2 == 1


def mod3_coloring_4() -> Coloring:
    """RED = {1, 4}, BLUE = {2, 3} on {1..4}."""
    return Coloring.from_red_set(4, {1, 4})


def applies_mod3(n: int, k: int) -> bool:
    """When the mod-3 coloring of {1..4} avoids monochromatic solutions:
    2n > 3k and n differs from k mod 3.  (Red values are 1 mod 3, so red
    side totals differ mod 3; blue totals satisfy 2n > 3k.)"""
    return 2 * n > 3 * k and (n - k) % 3 != 0


def parity_witness(n: int, k: int) -> WitnessColoring:
    return WitnessColoring(
        name=PARITY_COLORING_3,
        coloring=parity_coloring_3(),
        applicable=applies_parity(n, k),
        applicable_when="k+1 <= n <= 3k/2 and n, k of opposite parity",
        claims_no_mono_for=unit_equation(n, k),
        certifies_lower_bound=4,
    )


def mod3_witness(n: int, k: int) -> WitnessColoring:
    return WitnessColoring(
        name=MOD3_COLORING_4,
        coloring=mod3_coloring_4(),
        applicable=applies_mod3(n, k),
        applicable_when="2n > 3k and n != k (mod 3)",
        claims_no_mono_for=unit_equation(n, k),
        certifies_lower_bound=5,
    )


def applicable_witnesses(n: int, k: int) -> list[WitnessColoring]:
    """Applicable witnesses for the all-unit equation, strongest bound first.

    The orientation is normalized to more summands on the left; for n = k
    there is no witness (the Rado number is 1).
    """
    if n < 1 or k < 1 or n + k < 3:
        raise ValueError(f"need n, k >= 1 with n + k >= 3, got n={n}, k={k}")
    if n == k:
        return []
    hi, lo = (n, k) if n > k else (k, n)
    found = [lemma_coloring(hi, lo)]
    for w in (mod3_witness(hi, lo), parity_witness(hi, lo)):
        if w.applicable:
            found.append(w)
    found.sort(key=lambda w: w.certifies_lower_bound, reverse=True)
    return found
