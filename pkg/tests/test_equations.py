import pytest
from hypothesis import given, strategies as st

from rado2.equations import (
    Equation,
    General,
    GuoSunForm,
    UnitBothSides,
    UnitLhsSingleRhs,
    UnitLhsWeightedRhs,
    classify,
    single_rhs_equation,
    unit_equation,
    weighted_rhs_equation,
)


def test_parse_basic():
    eq = Equation.parse("1,1,1=1,2")
    assert eq.lhs_coeffs == (1, 1, 1)
    assert eq.rhs_coeffs == (1, 2)


def test_parse_ignores_whitespace():
    eq = Equation.parse(" 1 , 2 = 3 ")
    assert eq.lhs_coeffs == (1, 2)
    assert eq.rhs_coeffs == (3,)


@pytest.mark.parametrize(
    "bad",
    ["", "1,1", "1,1=", "=1,2", "1,1=1=2", "1,x=2", "0,1=2", "-1,2=3", "1.5=2,2"],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        Equation.parse(bad)


def test_too_few_variables_rejected():
    # x = y has only two variables total, no interesting coloring content
    with pytest.raises(ValueError):
        Equation((1,), (1,))


def test_text_round_trip():
    eq = Equation.parse("1,1,2=3,1")
    assert Equation.parse(eq.text()) == eq


@given(
    st.lists(st.integers(1, 9), min_size=1, max_size=4),
    st.lists(st.integers(1, 9), min_size=1, max_size=4),
)
def test_round_trip_property(lhs, rhs):
    if len(lhs) + len(rhs) < 3:
        lhs = lhs + [1]
    eq = Equation(tuple(lhs), tuple(rhs))
    assert Equation.parse(eq.text()) == eq


def test_swap_sides():
    eq = Equation.parse("1,2=3,4,5")
    assert eq.swap_sides() == Equation.parse("3,4,5=1,2")


def test_equation_is_hashable():
    a = Equation.parse("1,1=2")
    b = Equation((1, 1), (2,))
    assert a == b
    assert hash(a) == hash(b)


def test_helpers():
    assert unit_equation(3, 2) == Equation.parse("1,1,1=1,1")
    assert single_rhs_equation(4, 3) == Equation.parse("1,1,1=3")
    assert weighted_rhs_equation(2, (1, 2)) == Equation.parse("1,1=1,2")


def test_classify_unit_both_sides():
    got = classify(unit_equation(5, 3))
    assert got == UnitBothSides(n=5, k=3)


def test_classify_single_rhs():
    got = classify(Equation.parse("1,1,1=1"))
    assert got == UnitLhsSingleRhs(m=4, a=1)
    got = classify(Equation.parse("1,1,1,1=3"))
    assert got == UnitLhsSingleRhs(m=5, a=3)


def test_classify_weighted_rhs():
    got = classify(Equation.parse("1,1=2,1"))
    assert got == UnitLhsWeightedRhs(n=2, coeffs=(1, 2), A=3)


def test_classify_guo_sun():
    got = classify(Equation.parse("2,3=1"))
    assert got == GuoSunForm(coeffs=(2, 3), a_min=2, w=5)


def test_classify_general_fallback():
    got = classify(Equation.parse("2,3=4,5"))
    assert isinstance(got, General)


def test_classify_unit_needs_two_per_side():
    # a single unit variable on the right is the single-coefficient shape,
    # not the all-units shape
    got = classify(Equation.parse("1,1,1=1"))
    assert isinstance(got, UnitLhsSingleRhs)


@given(st.integers(2, 8), st.integers(2, 8))
def test_classify_unit_both_sides_property(n, k):
    assert classify(unit_equation(n, k)) == UnitBothSides(n=n, k=k)
