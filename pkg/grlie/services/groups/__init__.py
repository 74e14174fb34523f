"""
Finitely presented groups, built-in families, products and Fox calculus.
"""

from grlie.services.groups.families import (
    abelian,
    direct_product,
    family,
    free,
    free_product,
    integers,
    named_group,
    pbar4,
    vP,
    vP_plus,
)
from grlie.services.groups.fox import (
    LaurentMatrix,
    fox_matrix,
    fundamental_identity_holds,
    initial_forms,
    is_commutator_relators,
)
from grlie.services.groups.presentation import GroupPresentation, Word

__all__ = [
    "GroupPresentation",
    "LaurentMatrix",
    "Word",
    "abelian",
    "direct_product",
    "family",
    "fox_matrix",
    "free",
    "free_product",
    "fundamental_identity_holds",
    "initial_forms",
    "integers",
    "is_commutator_relators",
    "named_group",
    "pbar4",
    "vP",
    "vP_plus",
]
