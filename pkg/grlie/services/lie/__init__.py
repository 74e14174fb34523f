"""
Free Lie algebras, Hall bases, graded quotients and Chen ranks.
"""

from grlie.services.lie.hall import HallElement, hall_basis, hall_expand, lyndon_words, to_hall
from grlie.services.lie.mildness import MildnessVerdict, anick_series, mildness_check
from grlie.services.lie.presentation import (
    LiePresentation,
    LieRelator,
    free_lie_presentation,
    holonomy_presentation,
    initial_form_presentation,
    quadratic_relators,
)
from grlie.services.lie.quotient import GradedDims, LieQuotient, chen_dims, graded_dims

__all__ = [
    "GradedDims",
    "HallElement",
    "LiePresentation",
    "LieQuotient",
    "LieRelator",
    "MildnessVerdict",
    "anick_series",
    "chen_dims",
    "free_lie_presentation",
    "graded_dims",
    "hall_basis",
    "hall_expand",
    "holonomy_presentation",
    "initial_form_presentation",
    "lyndon_words",
    "mildness_check",
    "quadratic_relators",
    "to_hall",
]
