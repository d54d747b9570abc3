import pytest

from rado2.closed_forms import nested_ceiling
from rado2.equations import unit_equation
from rado2.rado_theorems import rado_unit
from rado2.search import has_mono_solution
from rado2.witnesses import (
    LEMMA_COLORING,
    MOD3_COLORING_4,
    PARITY_COLORING_3,
    applicable_witnesses,
    applies_mod3,
    applies_parity,
    lemma_coloring,
    mod3_witness,
    parity_witness,
)


def test_lemma_coloring_shape():
    w = lemma_coloring(6, 2)
    assert w.name == LEMMA_COLORING
    assert w.coloring.r == nested_ceiling(7, 2) - 1 == 8
    assert w.coloring.red_values() == [1, 2]
    assert w.certifies_lower_bound == 9


def test_lemma_coloring_valid_on_grid():
    # the coloring must avoid monochromatic solutions for every n > k
    for n in range(2, 16):
        for k in range(1, n):
            w = lemma_coloring(n, k)
            eq = unit_equation(n, k)
            assert not has_mono_solution(eq, w.coloring), (n, k)
            assert w.certifies_lower_bound == nested_ceiling(n + 1, k)


def test_lemma_bound_is_sound():
    for n in range(2, 16):
        for k in range(1, n):
            w = lemma_coloring(n, k)
            assert w.certifies_lower_bound <= rado_unit(n, k).value, (n, k)


def test_lemma_bound_tight_sometimes():
    # for (5, 2) the closed form equals the nested ceiling, so the witness
    # interval is one below the true value
    w = lemma_coloring(5, 2)
    assert w.certifies_lower_bound == rado_unit(5, 2).value == 8


def test_lemma_rejects_bad_orientation():
    with pytest.raises(ValueError):
        lemma_coloring(3, 3)
    with pytest.raises(ValueError):
        lemma_coloring(2, 5)


def test_parity_applicability():
    assert applies_parity(5, 4)
    assert applies_parity(3, 2)
    assert not applies_parity(6, 4)      # same parity
    assert not applies_parity(7, 4)      # 2n > 3k
    assert not applies_parity(4, 4)      # needs n > k


def test_parity_witness_valid_when_applicable():
    for n in range(2, 13):
        for k in range(1, n):
            if not applies_parity(n, k):
                continue
            w = parity_witness(n, k)
            assert w.applicable
            assert not has_mono_solution(unit_equation(n, k), w.coloring), (n, k)
            assert w.certifies_lower_bound == 4
            assert 4 <= rado_unit(n, k).value, (n, k)


def test_parity_witness_fails_outside_range():
    # same parity: 1*6 = 1+1+1+3 is monochromatic red
    w = parity_witness(6, 4)
    assert not w.applicable
    assert has_mono_solution(unit_equation(6, 4), w.coloring)


def test_mod3_applicability():
    assert applies_mod3(9, 5)
    assert applies_mod3(5, 3)
    assert not applies_mod3(6, 3)       # n = k (mod 3)
    assert not applies_mod3(4, 3)       # 2n <= 3k


def test_mod3_witness_valid_when_applicable():
    for n in range(2, 13):
        for k in range(1, n):
            if not applies_mod3(n, k):
                continue
            w = mod3_witness(n, k)
            assert w.applicable
            assert not has_mono_solution(unit_equation(n, k), w.coloring), (n, k)
            assert w.certifies_lower_bound == 5
            assert 5 <= rado_unit(n, k).value, (n, k)


def test_mod3_witness_fails_outside_range():
    # n = k (mod 3): 1*6 = 1+1+4 is monochromatic red
    w = mod3_witness(6, 3)
    assert not w.applicable
    assert has_mono_solution(unit_equation(6, 3), w.coloring)


def test_applicable_witnesses_equal_sides_empty():
    assert applicable_witnesses(4, 4) == []


def test_applicable_witnesses_sorted_and_sound():
    for n in range(2, 13):
        for k in range(1, n):
            witnesses = applicable_witnesses(n, k)
            assert witnesses, (n, k)
            assert witnesses[0].name == LEMMA_COLORING or (
                witnesses[0].certifies_lower_bound
                > max(w.certifies_lower_bound for w in witnesses[1:])
            )
            bounds = [w.certifies_lower_bound for w in witnesses]
            assert bounds == sorted(bounds, reverse=True)
            exact = rado_unit(n, k).value
            for w in witnesses:
                assert w.applicable
                assert not has_mono_solution(unit_equation(n, k), w.coloring)
                assert w.certifies_lower_bound <= exact, (n, k, w.name)


def test_applicable_witnesses_normalizes_orientation():
    a = applicable_witnesses(4, 7)
    b = applicable_witnesses(7, 4)
    assert [(w.name, w.certifies_lower_bound) for w in a] == [
        (w.name, w.certifies_lower_bound) for w in b
    ]


def test_applicable_witnesses_includes_pointwise_colorings():
    names = {w.name for w in applicable_witnesses(9, 5)}
    assert MOD3_COLORING_4 in names
    names = {w.name for w in applicable_witnesses(5, 4)}
    assert PARITY_COLORING_3 in names


def test_witness_serialization():
    w = parity_witness(5, 4)
    d = w.to_dict()
    assert d == {
        "r": 3,
        "red": [1, 3],
        "blue": [2],
        "name": "ParityColoring3",
        "certifies_lower_bound": 4,
    }


def test_applicable_witnesses_validation():
    with pytest.raises(ValueError):
        applicable_witnesses(0, 3)
    with pytest.raises(ValueError):
        applicable_witnesses(1, 1)
