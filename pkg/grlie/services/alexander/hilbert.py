"""
Hilbert series of presented modules by exact sparse elimination.

``gr_hilbert`` works in R_D = S / m^(D+1): the span W of all x^alpha c
(c a relation column) is echelonized with ambient columns ordered by total
degree, pivot = lowest column. Rows whose pivot has degree k span the initial
forms of W in degree k, so

    dim gr_k(B) = q * dim S_k - #(pivots of degree k),    k <= D,

exact because m^(D+1) B lies in m^(k+1) B. ``graded_hilbert`` handles
modules with homogeneous columns degree by degree.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from grlie.config import settings
from grlie.services.alexander.exceptions import (
    AlexanderError,
    ModuleBudgetError,
    NonHomogeneousColumnError,
)
from grlie.services.alexander.module import ModulePresentation
from grlie.services.numeric.elimination import certified_elimination, certified_rank
from grlie.services.numeric.parallel import parallel_map
from grlie.services.numeric.polynomials import Exponent, monomial_count, monomials_of_degree, to_scalar

logger = logging.getLogger(__name__)

Term = Tuple[Exponent, int, Fraction]


def default_truncation(n: int) -> int:
    """Truncation degree used when none is given: 8 up to six generators, 4 beyond."""
    if settings.GRLIE_DEFAULT_TRUNCATION is not None:
        return settings.GRLIE_DEFAULT_TRUNCATION
    return 8 if n <= 6 else 4


def _options(elimination: Dict) -> Dict:
    return {**settings.get_service_config("numeric"), **elimination}


def _budget(budget: Optional[int]) -> int:
    return settings.get_service_config("alexander")["budget"] if budget is None else budget


def _column_terms(column: Sequence) -> Tuple[Term, ...]:
    return tuple((exp, r, to_scalar(c)) for r, f in enumerate(column) for exp, c in f.items())


def _shift(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def truncated_dimension(n: int, q: int, D: int) -> int:
    """dim of R_D^q = C(D + n, n) * q."""
    return comb(D + n, n) * q


def gr_hilbert(
    M: ModulePresentation, D: int, budget: Optional[int] = None, **elimination
) -> List[int]:
    """
    dim gr_k(B) for k = 0..D, B the cokernel of M, graded by the m-adic filtration.

    Args:
        M: module presentation (entries of any order)
        D: truncation degree
        budget: max ambient dimension, defaults to GRLIE_MODULE_BUDGET
        elimination: overrides for certified_elimination

    Raises:
        ModuleBudgetError: if C(D + n, n) * q exceeds the budget
    """
    if D < 0:
        raise AlexanderError("truncation degree must be >= 0")
    n, q = M.nvars, M.rank
    if q == 0:
        return [0] * (D + 1)
    ambient = truncated_dimension(n, q, D)
    if ambient > _budget(budget):
        raise ModuleBudgetError(
            f"truncated module has dimension {ambient} at D={D}, budget is {_budget(budget)}"
        )

    index: Dict[Tuple[Exponent, int], int] = {}
    degree_of: List[int] = []
    for d in range(D + 1):
        for exp in monomials_of_degree(n, d):
            for r in range(q):
                index[(exp, r)] = len(index)
                degree_of.append(d)

    rows: List[Dict[int, Fraction]] = []
    for c, column in enumerate(M.columns):
        terms = _column_terms(column)
        low = M.column_order(c)
        for d in range(D - low + 1):
            for alpha in monomials_of_degree(n, d):
                row = {}
                for exp, r, value in terms:
                    if sum(exp) + d <= D:
                        row[index[(_shift(alpha, exp), r)]] = value
                rows.append(row)

    result = certified_elimination(rows, **_options(elimination))
    pivots = [0] * (D + 1)
    for col in result.pivot_columns:
        pivots[degree_of[col]] += 1
    dims = [q * monomial_count(n, k) - pivots[k] for k in range(D + 1)]
    logger.info(
        "computed truncated associated graded",
        extra={"presentation": M.label, "degree": D, "ambient": ambient, "rows": len(rows), "dims": dims},
    )
    return dims


def _column_degree(column: Sequence) -> int:
    degrees = {sum(exp) for f in column for exp in f.keys()}
    if len(degrees) != 1:
        raise NonHomogeneousColumnError(f"column mixes degrees {sorted(degrees)}")
    return degrees.pop()


def _graded_degree_job(job) -> int:
    n, q, columns, k, options = job
    index = {(exp, r): pos for pos, (exp, r) in enumerate(
        (exp, r) for exp in monomials_of_degree(n, k) for r in range(q)
    )}
    rows = []
    for degree, terms in columns:
        for alpha in monomials_of_degree(n, k - degree):
            rows.append({index[(_shift(alpha, exp), r)]: value for exp, r, value in terms})
    rank = certified_rank(rows, **options) if rows else 0
    return q * monomial_count(n, k) - rank


def graded_hilbert(
    M: ModulePresentation, D: int, budget: Optional[int] = None, **elimination
) -> List[int]:
    """
    Degree-k dimensions, k = 0..D, of a module with homogeneous columns.

    A column homogeneous of degree d_c contributes the rows x^alpha c with
    |alpha| = k - d_c; every degree is computed exactly and independently.

    Raises:
        NonHomogeneousColumnError: if some column is not homogeneous
        ModuleBudgetError: if q * dim S_D exceeds the budget
    """
    if D < 0:
        raise AlexanderError("degree must be >= 0")
    n, q = M.nvars, M.rank
    if q == 0:
        return [0] * (D + 1)
    columns = [(_column_degree(col), _column_terms(col)) for col in M.columns]
    ambient = q * monomial_count(n, D)
    if ambient > _budget(budget):
        raise ModuleBudgetError(f"degree-{D} layer has dimension {ambient}, budget is {_budget(budget)}")

    options = _options(elimination)
    workers = options.get("workers", 1)
    inner = {**options, "workers": 1} if workers > 1 else options
    jobs = [(n, q, columns, k, inner) for k in range(D + 1)]
    dims = parallel_map(_graded_degree_job, jobs, workers)
    logger.info("computed graded Hilbert function", extra={"presentation": M.label, "degree": D, "dims": dims})
    return dims
