"""
Fox calculus and Magnus initial forms for commutator-relators presentations.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from grlie.services.groups.exceptions import NotCommutatorRelatorsError
from grlie.services.groups.presentation import GroupPresentation, Word
from grlie.services.numeric.exterior import pair_index
from grlie.services.numeric.polynomials import LaurentPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaurentMatrix:
    """Dense matrix of Laurent polynomials in t_1..t_n, one row per relator."""

    nvars: int
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.nvars

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows[i][j]


def is_commutator_relators(G: GroupPresentation) -> bool:
    """True iff every relator has zero exponent sum in every generator."""
    zero = (0,) * G.ngens
    return all(r.exponent_sums(G.ngens) == zero for r in G.relators)


def _require_commutators(G: GroupPresentation) -> None:
    if not is_commutator_relators(G):
        raise NotCommutatorRelatorsError(f"{G.name or 'presentation'} has a relator with nonzero exponent sum")


def fox_row(word: Word, n: int) -> List[LaurentPoly]:
    """
    Abelianized Fox derivatives of one word.

    Each letter contributes ab(prefix) for x and -ab(prefix) t_x^-1 for x^-1
    to the column of its generator.
    """
    row = [LaurentPoly.zero(n) for _ in range(n)]
    prefix = [0] * n
    for gen, exp in word:
        if exp == 1:
            row[gen] = row[gen] + LaurentPoly.monomial(n, prefix)
        else:
            shifted = list(prefix)
            shifted[gen] -= 1
            row[gen] = row[gen] - LaurentPoly.monomial(n, shifted)
        prefix[gen] += exp
    return row


def fox_matrix(G: GroupPresentation) -> LaurentMatrix:
    """
    Abelianized Jacobian of Fox derivatives, one row per relator.

    Raises:
        NotCommutatorRelatorsError: if some relator does not abelianize to 1
    """
    _require_commutators(G)
    rows = tuple(tuple(fox_row(r, G.ngens)) for r in G.relators)
    return LaurentMatrix(G.ngens, rows)


def fundamental_identity_holds(row: Sequence[LaurentPoly]) -> bool:
    """sum_j row_j (t_j - 1) == 0."""
    n = len(row)
    total = LaurentPoly.zero(n)
    for j, entry in enumerate(row):
        unit = [0] * n
        unit[j] = 1
        total = total + entry * (LaurentPoly.monomial(n, unit) - LaurentPoly.one(n))
    return total.is_zero()


def initial_form(word: Word, n: int) -> List[int]:
    """
    Degree-2 Magnus initial form of a commutator word.

    Returns the coefficients of [x_i, x_j] over the pairs i < j in
    lexicographic order: c_ij = sum over letters l < l' with generators i, j
    of the product of their exponents.
    """
    index = pair_index(n)
    coeffs = [0] * len(index)
    seen = [0] * n
    for gen, exp in word:
        for i in range(gen):
            if seen[i]:
                coeffs[index[(i, gen)]] += seen[i] * exp
        seen[gen] += exp
    return coeffs


def initial_forms(G: GroupPresentation) -> List[List[int]]:
    """
    Initial forms of all relators.

    Raises:
        NotCommutatorRelatorsError: if some relator has nonzero exponent sum
    """
    _require_commutators(G)
    return [initial_form(r, G.ngens) for r in G.relators]
