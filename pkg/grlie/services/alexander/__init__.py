"""
Alexander invariants: Koszul lifts, module presentations, Hilbert series and Chen ranks.
"""

from grlie.services.alexander.hilbert import default_truncation, gr_hilbert, graded_hilbert
from grlie.services.alexander.koszul import (
    koszul_apply,
    koszul_differential,
    koszul_homotopy,
    koszul_lift,
    koszul_lift_euler,
)
from grlie.services.alexander.module import (
    ModulePresentation,
    alexander_presentation,
    linearized_presentation,
)
from grlie.services.alexander.theta import (
    ChenFormulaVerdict,
    ThetaComparison,
    ThetaSeries,
    chen_formula_difference,
    chen_formula_test,
    chen_series,
    free_chen_series,
    free_product_abelian_series,
    holonomy_chen_series,
    known_chen_series,
    theta_closed,
    theta_comparison,
)

__all__ = [
    "ChenFormulaVerdict",
    "ModulePresentation",
    "ThetaComparison",
    "ThetaSeries",
    "alexander_presentation",
    "chen_formula_difference",
    "chen_formula_test",
    "chen_series",
    "default_truncation",
    "free_chen_series",
    "free_product_abelian_series",
    "gr_hilbert",
    "graded_hilbert",
    "holonomy_chen_series",
    "known_chen_series",
    "koszul_apply",
    "koszul_differential",
    "koszul_homotopy",
    "koszul_lift",
    "koszul_lift_euler",
    "linearized_presentation",
    "theta_closed",
    "theta_comparison",
]
