"""
Numeric core: exact scalars, polynomials, series and sparse linear algebra.
"""

from grlie.services.numeric.elimination import (
    EchelonBasis,
    EliminationResult,
    certified_elimination,
    certified_rank,
    eliminate,
    prime_pool,
)
from grlie.services.numeric.exterior import pair_index, pairs, wedge_basis, wedge_index, wedge_sign
from grlie.services.numeric.matrices import (
    SparseMatrix,
    determinant,
    determinant_laplace,
    generic_rank,
    minors,
    nullspace,
    polynomial_matrix,
    rank,
    rref,
)
from grlie.services.numeric.polynomials import (
    LaurentPoly,
    MultiPoly,
    Scalar,
    evaluate,
    homogeneous_component,
    initial_form,
    linear_part,
    poly_ring,
)
from grlie.services.numeric.series import (
    BiSeries,
    UniRationalFunction,
    format_polynomial,
    series_expand,
    truncated_exp,
)

__all__ = [
    "BiSeries",
    "EchelonBasis",
    "EliminationResult",
    "LaurentPoly",
    "MultiPoly",
    "Scalar",
    "SparseMatrix",
    "UniRationalFunction",
    "certified_elimination",
    "certified_rank",
    "determinant",
    "determinant_laplace",
    "eliminate",
    "evaluate",
    "format_polynomial",
    "generic_rank",
    "homogeneous_component",
    "initial_form",
    "linear_part",
    "minors",
    "nullspace",
    "pair_index",
    "pairs",
    "poly_ring",
    "polynomial_matrix",
    "prime_pool",
    "rank",
    "rref",
    "series_expand",
    "truncated_exp",
    "wedge_basis",
    "wedge_index",
    "wedge_sign",
]
