"""
Two-step cohomology algebras, closed-form Poincaré polynomials and EGF checks.
"""

from grlie.services.cohomology.algebra import (
    TwoStepAlgebra,
    algebra_family,
    coproduct_algebra,
    presentation_algebra,
    quadratic_algebra,
    relation_vector,
    tensor_algebra,
)
from grlie.services.cohomology.poincare import (
    IdentityCheck,
    egf_expansion,
    egf_identity_check,
    euler_characteristic,
    poincare_closed,
)

__all__ = [
    "IdentityCheck",
    "TwoStepAlgebra",
    "algebra_family",
    "coproduct_algebra",
    "egf_expansion",
    "egf_identity_check",
    "euler_characteristic",
    "poincare_closed",
    "presentation_algebra",
    "quadratic_algebra",
    "relation_vector",
    "tensor_algebra",
]
