"""
Aomoto complexes of two-step algebras.

For a in A^1 the Aomoto differential delta^1_a: A^1 -> A^2 is u -> a u.
Over S = QQ[x_1..x_b1] the universal differential has entry

    (r, j) = sum_i coeff_r(e_i e_j) x_i,

so evaluating at a point a gives delta^1_a, and for a != 0

    b1(A, a) = b1 - rank(delta^1_a) - 1.
"""

import logging
import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.rings import PolyRing

from grlie.services.cohomology.algebra import TwoStepAlgebra
from grlie.services.cohomology.exceptions import TopDegreeError
from grlie.services.numeric.elimination import eliminate
from grlie.services.numeric.matrices import SparseMatrix, rank
from grlie.services.numeric.polynomials import MultiPoly, default_names, poly_from_terms, poly_ring, poly_terms

logger = logging.getLogger(__name__)

_INDEXED = re.compile(r"^[A-Za-z]+([0-9][0-9_]*)$")


def coordinate_names(A: TwoStepAlgebra) -> Tuple[str, ...]:
    """x_ij for a basis e_ij (any alphabetic prefix), otherwise x1..xn."""
    names = []
    for label in A.basis1:
        match = _INDEXED.match(label)
        if not match:
            return default_names(A.b1)
        names.append(f"x{match.group(1)}")
    if len(set(names)) != len(names):
        return default_names(A.b1)
    return tuple(names)


def coordinate_ring(A: TwoStepAlgebra) -> PolyRing:
    """Polynomial ring of linear coordinates on A^1."""
    return poly_ring(coordinate_names(A))


def product_table(A: TwoStepAlgebra) -> List[List[List[Fraction]]]:
    """table[r][j][i] = coeff_r(e_i e_j)."""
    table = [[[Fraction(0)] * A.b1 for _ in range(A.b1)] for _ in range(A.b2)]
    for i in range(A.b1):
        for j in range(A.b1):
            for r, c in enumerate(A.product(i, j)):
                if c:
                    table[r][j][i] = c
    return table


def _unit(n: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def aomoto_matrix(A: TwoStepAlgebra, ring: PolyRing = None) -> SparseMatrix:
    """The b2 x b1 matrix of delta^1 with linear-form entries."""
    ring = ring or coordinate_ring(A)
    table = product_table(A)
    entries = {}
    for r in range(A.b2):
        for j in range(A.b1):
            form = poly_from_terms(ring, {_unit(A.b1, i): c for i, c in enumerate(table[r][j]) if c})
            if form:
                entries[(r, j)] = form
    return SparseMatrix(A.b2, A.b1, entries, ring.to_domain())


def aomoto_at(A: TwoStepAlgebra, a: Sequence) -> SparseMatrix:
    """delta^1_a as a rational matrix."""
    if len(a) != A.b1:
        raise ValueError(f"point has {len(a)} coordinates, A^1 has dimension {A.b1}")
    point = [Fraction(v) for v in a]
    entries = {}
    for i, ai in enumerate(point):
        if not ai:
            continue
        for j in range(A.b1):
            for r, c in enumerate(A.product(i, j)):
                if c:
                    entries[(r, j)] = entries.get((r, j), 0) + ai * c
    return SparseMatrix(A.b2, A.b1, entries)


def aomoto_rank(A: TwoStepAlgebra, a: Sequence) -> int:
    return rank(aomoto_at(A, a))


def aomoto_b1(A: TwoStepAlgebra, a: Sequence) -> int:
    """b1(A, a): b1 at the origin, b1 - rank(delta^1_a) - 1 elsewhere."""
    if not any(a):
        return A.b1
    return A.b1 - aomoto_rank(A, a) - 1


def aomoto_b2(A: TwoStepAlgebra, a: Sequence) -> int:
    """
    b2(A, a) = b2 - rank(delta^1_a) for an algebra vanishing above degree 2.

    Raises:
        TopDegreeError: unless the algebra is flagged as having top degree <= 2
    """
    if not A.top_degree_at_most_two:
        raise TopDegreeError(f"{A.name or 'algebra'} is not known to vanish above degree 2")
    if not any(a):
        return A.b2
    return A.b2 - aomoto_rank(A, a)


def _linear_rows(matrix_rows: Sequence[Sequence[MultiPoly]], nvars: int) -> List[dict]:
    """Each matrix row as a vector of its linear-form coefficients, one slot per (column, variable)."""
    out = []
    for row in matrix_rows:
        vec = {}
        for j, f in enumerate(row):
            if not f:
                continue
            for exp, c in poly_terms(f).items():
                vec[j * nvars + exp.index(1)] = c
        out.append(vec)
    return out


def same_row_space(M: SparseMatrix, rows: Sequence[Sequence[MultiPoly]]) -> bool:
    """
    Whether a linear-form matrix and ``rows`` differ by an invertible change of rows.

    This is equality up to permutation, signs and any relabelling of the
    A^2 basis.
    """
    nvars = M.domain.ring.ngens if M.is_polynomial else 0
    mine = _linear_rows(M.to_dense(), nvars)
    theirs = _linear_rows(rows, nvars)
    r1, r2 = eliminate(mine).rank, eliminate(theirs).rank
    return r1 == r2 == eliminate(mine + theirs).rank
