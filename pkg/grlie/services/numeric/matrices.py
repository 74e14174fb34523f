"""
Sparse matrices over QQ, prime fields and polynomial rings.

One SparseMatrix shape serves all three flavours; the entry domain is a
sympy domain (``QQ``, ``GF(p)`` or ``PolyRing.to_domain()``). Dense work
(rank, rref, determinants) is delegated to sympy's DomainMatrix.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import GF
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyRing

from grlie.services.numeric.exceptions import DomainMismatchError, MinorSizeError
from grlie.services.numeric.polynomials import MultiPoly, evaluate, from_scalar, to_scalar

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


def _coerce(value, domain):
    if isinstance(value, Fraction):
        return domain.convert_from(from_scalar(value), QQ)
    return domain.convert(value)


@dataclass(frozen=True)
class SparseMatrix:
    """
    Sparse matrix with entries in a sympy domain.

    Zero entries are never stored; indices are validated on construction.
    """

    nrows: int
    ncols: int
    entries: Mapping[Entry, Any] = field(default_factory=dict)
    domain: Any = QQ

    def __post_init__(self):
        clean: Dict[Entry, Any] = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise IndexError(f"entry ({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
            value = _coerce(value, self.domain)
            if value:
                clean[(i, j)] = value
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], domain=QQ, ncols: Optional[int] = None) -> "SparseMatrix":
        """Build from a dense list of rows."""
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(len(rows), width, entries, domain)

    @classmethod
    def identity(cls, n: int, domain=QQ) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)}, domain)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_polynomial(self) -> bool:
        return getattr(self.domain, "is_PolynomialRing", False)

    def get(self, i: int, j: int):
        return self.entries.get((i, j), self.domain.zero)

    def rows(self) -> List[Dict[int, Any]]:
        """Row dicts col -> value."""
        out: List[Dict[int, Any]] = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_dense(self) -> List[List[Any]]:
        out = [[self.domain.zero] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()}, self.domain)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        entries = {
            (rpos[i], cpos[j]): v for (i, j), v in self.entries.items() if i in rpos and j in cpos
        }
        return SparseMatrix(len(rows), len(cols), entries, self.domain)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix.from_dok(dict(self.entries), self.shape, self.domain)

    def evaluate(self, point: Sequence[Any]) -> "SparseMatrix":
        """Evaluate a polynomial matrix at a rational point."""
        if not self.is_polynomial:
            raise DomainMismatchError("evaluate needs a polynomial matrix")
        entries = {key: evaluate(v, point) for key, v in self.entries.items()}
        return SparseMatrix(self.nrows, self.ncols, entries, QQ)

    def reduce_mod(self, prime: int) -> "SparseMatrix":
        """Image of a rational matrix in GF(prime)."""
        if self.domain != QQ:
            raise DomainMismatchError("only rational matrices reduce modulo a prime")
        field_ = GF(prime)
        entries = {}
        for key, v in self.entries.items():
            q = to_scalar(v)
            entries[key] = field_(q.numerator) / field_(q.denominator)
        return SparseMatrix(self.nrows, self.ncols, entries, field_)

    def __iter__(self) -> Iterator[Tuple[Entry, Any]]:
        return iter(sorted(self.entries.items()))


def rank(matrix: SparseMatrix) -> int:
    """
    Exact rank over the entry domain.

    Polynomial matrices get their generic rank (rank over the fraction field).
    """
    if not matrix.entries:
        return 0
    dm = matrix.to_domain_matrix()
    if not dm.domain.is_Field:
        dm = dm.to_field()
    return dm.rank()


def rref(matrix: SparseMatrix) -> Tuple[List[Dict[int, Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form of a rational matrix: nonzero rows and pivot columns."""
    if matrix.domain != QQ:
        raise DomainMismatchError("rref is provided for rational matrices")
    if not matrix.entries:
        return [], ()
    reduced, pivots = matrix.to_domain_matrix().rref()
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(len(pivots))]
    for (i, j), v in reduced.to_dok().items():
        if i < len(pivots):
            rows[i][j] = to_scalar(v)
    return rows, tuple(pivots)


def nullspace(matrix: SparseMatrix) -> List[List[Fraction]]:
    """Basis of {v : M v = 0} over QQ, one vector per free column."""
    rows, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * matrix.ncols
        vec[free] = Fraction(1)
        for row, col in zip(rows, pivots):
            vec[col] = -row.get(free, Fraction(0))
        basis.append(vec)
    return basis


def determinant(matrix: SparseMatrix):
    """Fraction-free (Bareiss) determinant of a square matrix."""
    if matrix.nrows != matrix.ncols:
        raise MinorSizeError("determinant of a non-square matrix")
    if matrix.nrows == 0:
        return matrix.domain.one
    return matrix.to_domain_matrix().to_dense().det()


def determinant_laplace(matrix: SparseMatrix):
    """Cofactor expansion along the first row; the cross-check for ``determinant``."""
    if matrix.nrows != matrix.ncols:
        raise MinorSizeError("determinant of a non-square matrix")
    dense = matrix.to_dense()
    zero = matrix.domain.zero

    def expand(rows: Tuple[int, ...], cols: Tuple[int, ...]):
        if not rows:
            return matrix.domain.one
        total = zero
        head, rest = rows[0], rows[1:]
        for pos, c in enumerate(cols):
            value = dense[head][c]
            if not value:
                continue
            minor = expand(rest, cols[:pos] + cols[pos + 1:])
            total = total + value * minor if pos % 2 == 0 else total - value * minor
        return total

    return expand(tuple(range(matrix.nrows)), tuple(range(matrix.ncols)))


def minors(matrix: SparseMatrix, size: int) -> List[MultiPoly]:
    """
    All nonzero size x size minors of a matrix.

    Rows and columns are chosen in lexicographic order; each minor is a
    Bareiss determinant over the entry domain.

    Raises:
        MinorSizeError: if size < 1 or size > min(rows, cols)
    """
    if size < 1 or size > min(matrix.nrows, matrix.ncols):
        raise MinorSizeError(f"minor size {size} out of range for a {matrix.nrows}x{matrix.ncols} matrix")
    rows = matrix.rows()
    nonzero_rows = [i for i in range(matrix.nrows) if rows[i]]
    out = []
    for rsel in combinations(nonzero_rows, size):
        support = set()
        for i in rsel:
            support.update(rows[i])
        for csel in combinations(sorted(support), size):
            value = determinant(matrix.submatrix(rsel, csel))
            if value:
                out.append(value)
    logger.debug("computed minors", extra={"size": size, "count": len(out)})
    return out


def generic_rank(matrix: SparseMatrix) -> int:
    """Rank of a polynomial matrix over the field of fractions of its ring."""
    if not matrix.is_polynomial:
        raise DomainMismatchError("generic rank needs a polynomial matrix")
    return rank(matrix)


def polynomial_matrix(ring: PolyRing, rows: Sequence[Sequence[MultiPoly]]) -> SparseMatrix:
    """Wrap rows of ring elements as a polynomial SparseMatrix."""
    return SparseMatrix.from_rows(rows, ring.to_domain(), ncols=len(rows[0]) if rows else 0)
