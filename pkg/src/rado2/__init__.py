"""2-color Rado numbers of linear sum equations.

Closed forms for x1+...+xn = b1*y1+...+bl*yl (piecewise case analysis over
the single-weighted-rhs family plus reduction theorems), an independent
exhaustive coloring-search oracle with witness colorings, named lower-bound
colorings, and DIMACS CNF export.
"""

from .closed_forms import (
    BB1982,
    FACT1,
    FACT2,
    FACT3,
    FACT4,
    GUO_SUN_2008,
    LEMMA_LOWER,
    PROVENANCE_TAGS,
    RadoResult,
    SCHAAL_VESTAL_2008,
    SEARCH,
    THEOREM1,
    THEOREM2,
    THEOREM3,
    THEOREM4_LOWER,
    branch_matches,
    guo_sun,
    nested_ceiling,
    rado_single_rhs,
)
from .equations import (
    Equation,
    EquationClass,
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
from .rado_theorems import (
    EXCEPTIONAL_PAIRS,
    ComparisonRecord,
    compare_unit_vs_single_rhs,
    rado_general,
    rado_unit,
)
from .search import (
    BLUE,
    CnfDocument,
    Coloring,
    MonoSolution,
    RED,
    SearchOutcome,
    achievable_sums,
    compute_rado,
    enumerate_solutions,
    export_cnf,
    find_mono_solution,
    has_mono_solution,
    parse_dimacs,
)
from .witnesses import (
    LEMMA_COLORING,
    MOD3_COLORING_4,
    PARITY_COLORING_3,
    WitnessColoring,
    applicable_witnesses,
    applies_mod3,
    applies_parity,
    lemma_coloring,
    mod3_coloring_4,
    mod3_witness,
    parity_coloring_3,
    parity_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BB1982", "BLUE", "CnfDocument", "Coloring", "ComparisonRecord", "EXCEPTIONAL_PAIRS",
    "Equation", "EquationClass", "FACT1", "FACT2", "FACT3", "FACT4", "GUO_SUN_2008",
    "General", "GuoSunForm", "LEMMA_COLORING", "LEMMA_LOWER", "MOD3_COLORING_4",
    "MonoSolution", "PARITY_COLORING_3", "PROVENANCE_TAGS", "RED", "RadoResult",
    "SCHAAL_VESTAL_2008", "SEARCH", "SearchOutcome", "THEOREM1", "THEOREM2", "THEOREM3",
    "THEOREM4_LOWER", "UnitBothSides", "UnitLhsSingleRhs", "UnitLhsWeightedRhs",
    "WitnessColoring", "achievable_sums", "applicable_witnesses", "applies_mod3",
    "applies_parity", "branch_matches", "classify", "compare_unit_vs_single_rhs",
    "compute_rado", "enumerate_solutions", "export_cnf", "find_mono_solution", "guo_sun",
    "has_mono_solution", "lemma_coloring", "mod3_coloring_4", "mod3_witness",
    "nested_ceiling", "parity_coloring_3", "parity_witness", "parse_dimacs",
    "rado_general", "rado_single_rhs", "rado_unit", "single_rhs_equation",
    "unit_equation", "weighted_rhs_equation",
]
