"""Equation model: linear sum equations with positive integer coefficients.

An equation is  a1*x1 + ... + an*xn = b1*y1 + ... + bk*yk  with all
coefficients positive; variables range over positive integers.  The text
form is comma/equals separated, e.g. "1,1,1=1,2".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Equation:
    lhs_coeffs: tuple[int, ...]
    rhs_coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lhs_coeffs", tuple(int(c) for c in self.lhs_coeffs))
        object.__setattr__(self, "rhs_coeffs", tuple(int(c) for c in self.rhs_coeffs))
        if not self.lhs_coeffs or not self.rhs_coeffs:
            raise ValueError("each side needs at least one variable")
        if any(c < 1 for c in self.lhs_coeffs + self.rhs_coeffs):
            raise ValueError(f"coefficients must be positive integers: {self.text()}")
        if len(self.lhs_coeffs) + len(self.rhs_coeffs) < 3:
            raise ValueError("need at least 3 variables in total")

    @classmethod
    def parse(cls, text: str) -> "Equation":
        """Parse the text form "1,1,1=1,2"; whitespace is ignored anywhere."""
        cleaned = "".join(text.split())
        lhs, sep, rhs = cleaned.partition("=")
        if not sep or not lhs or not rhs:
            raise ValueError(f"expected '<coeffs>=<coeffs>', got {text!r}")
        try:
            lhs_coeffs = tuple(int(part) for part in lhs.split(","))
            rhs_coeffs = tuple(int(part) for part in rhs.split(","))
        except ValueError:
            raise ValueError(f"non-integer coefficient in {text!r}") from None
        return cls(lhs_coeffs, rhs_coeffs)

    def text(self) -> str:
        return "{}={}".format(
            ",".join(map(str, self.lhs_coeffs)), ",".join(map(str, self.rhs_coeffs))
        )

    def swap_sides(self) -> "Equation":
        return Equation(self.rhs_coeffs, self.lhs_coeffs)

    def __str__(self) -> str:
        return self.text()


def unit_equation(n: int, k: int) -> Equation:
    """x1 + ... + xn = y1 + ... + yk."""
    return Equation((1,) * n, (1,) * k)


def single_rhs_equation(m: int, a: int) -> Equation:
    """x1 + ... + x_{m-1} = a*y, the m-variable single-weighted-rhs form."""
    return Equation((1,) * (m - 1), (a,))


def weighted_rhs_equation(n: int, rhs_coeffs) -> Equation:
    """x1 + ... + xn = b1*y1 + ... + bl*yl."""
    return Equation((1,) * n, tuple(rhs_coeffs))


# -- structural classification -------------------------------------------------

@dataclass(frozen=True)
class UnitBothSides:
    n: int
    k: int


@dataclass(frozen=True)
class UnitLhsSingleRhs:
    m: int  # total variable count: m-1 on the left, 1 on the right
    a: int


@dataclass(frozen=True)
class UnitLhsWeightedRhs:
    n: int
    coeffs: tuple[int, ...]  # sorted
    A: int


@dataclass(frozen=True)
class GuoSunForm:
    coeffs: tuple[int, ...]  # sorted lhs coefficients; rhs is a single unit variable
    a_min: int
    w: int


@dataclass(frozen=True)
class General:
    pass


EquationClass = Union[UnitBothSides, UnitLhsSingleRhs, UnitLhsWeightedRhs, GuoSunForm, General]


def classify(eq: Equation) -> EquationClass:
    """Most specific structural class of an equation.

    Depends only on the coefficient multisets.  Precedence: UnitBothSides
    (all coefficients 1, at least two variables per side), then
    UnitLhsSingleRhs (unit left side, single right variable), then
    UnitLhsWeightedRhs / GuoSunForm (disjoint once the first two are taken),
    then General.
    """
    lhs_unit = all(c == 1 for c in eq.lhs_coeffs)
    rhs_unit = all(c == 1 for c in eq.rhs_coeffs)
    n, k = len(eq.lhs_coeffs), len(eq.rhs_coeffs)
    if lhs_unit and rhs_unit and n >= 2 and k >= 2:
        return UnitBothSides(n=n, k=k)
    if lhs_unit and k == 1:
        return UnitLhsSingleRhs(m=n + 1, a=eq.rhs_coeffs[0])
    if lhs_unit:
        coeffs = tuple(sorted(eq.rhs_coeffs))
        return UnitLhsWeightedRhs(n=n, coeffs=coeffs, A=sum(coeffs))
    if k == 1 and eq.rhs_coeffs[0] == 1:
        coeffs = tuple(sorted(eq.lhs_coeffs))
        return GuoSunForm(coeffs=coeffs, a_min=coeffs[0], w=sum(coeffs))
    return General()
