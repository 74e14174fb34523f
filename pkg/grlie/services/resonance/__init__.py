"""
Aomoto complexes, resonance varieties and Aomoto Betti number formulas.
"""

from grlie.services.resonance.aomoto import (
    aomoto_at,
    aomoto_b1,
    aomoto_b2,
    aomoto_matrix,
    coordinate_ring,
    same_row_space,
)
from grlie.services.resonance.formulas import (
    BettiFormulaReport,
    LemmaReport,
    betti_formula_check,
    lemma_resonance2_check,
)
from grlie.services.resonance.varieties import (
    DepthSample,
    LinearSubspaceParam,
    ResonanceSummary,
    in_resonance,
    in_variety,
    line,
    resonance_dimension,
    resonance_ideal,
    resonance_report,
    sample_depth,
    subspace_from_equations,
    subspace_in_resonance,
)

__all__ = [
    "BettiFormulaReport",
    "DepthSample",
    "LemmaReport",
    "LinearSubspaceParam",
    "ResonanceSummary",
    "aomoto_at",
    "aomoto_b1",
    "aomoto_b2",
    "aomoto_matrix",
    "betti_formula_check",
    "coordinate_ring",
    "in_resonance",
    "in_variety",
    "lemma_resonance2_check",
    "line",
    "resonance_dimension",
    "resonance_ideal",
    "resonance_report",
    "same_row_space",
    "sample_depth",
    "subspace_from_equations",
    "subspace_in_resonance",
]
