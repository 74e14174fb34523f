"""
Presentations of the Alexander invariant and of its linearization.

For a commutator-relators group on n generators, B(G) is presented over
S = QQ[x_1..x_n] (with t_i = 1 + x_i) by

    wedge^3 (+) S^m --[delta_3 | nu]--> wedge^2 --> B(G) --> 0,

where nu lifts each cleared Fox row through delta_2.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Callable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from grlie.services.alexander.exceptions import NotACycleError, ProvenanceError
from grlie.services.alexander.koszul import koszul_apply, koszul_differential, koszul_lift
from grlie.services.groups.fox import fox_matrix
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.numeric.polynomials import (
    LaurentPoly,
    MultiPoly,
    homogeneous_component,
    order_of,
    poly_ring,
)

logger = logging.getLogger(__name__)

PROVENANCES = ("alexander", "linearized", "koszul")

Column = Tuple[MultiPoly, ...]
Lift = Callable[[Sequence[MultiPoly], Optional[PolyRing]], List[MultiPoly]]


@dataclass(frozen=True)
class ModulePresentation:
    """
    Cokernel of a map S^c -> S^q given by its relation columns.

    Zero columns are dropped on construction.
    """

    nvars: int
    rank: int
    columns: Tuple[Column, ...]
    provenance: str = "koszul"
    label: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ProvenanceError(f"unknown provenance {self.provenance!r}")
        if self.provenance != "koszul" and self.rank != comb(self.nvars, 2):
            raise ProvenanceError(
                f"{self.provenance} presentations have rank C({self.nvars}, 2), got {self.rank}"
            )
        columns = []
        for col in self.columns:
            col = tuple(col)
            if len(col) != self.rank:
                raise ProvenanceError(f"column of length {len(col)} in a rank-{self.rank} presentation")
            if any(col):
                columns.append(col)
        object.__setattr__(self, "columns", tuple(columns))

    @property
    def ring(self) -> PolyRing:
        return poly_ring(self.nvars)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def column_order(self, c: int) -> int:
        """Lowest total degree among the entries of column c."""
        return min(order_of(f) for f in self.columns[c] if f)


def cleared_fox_rows(G: GroupPresentation) -> List[List[LaurentPoly]]:
    """Fox rows multiplied by t^(-min exponents), so every exponent is >= 0."""
    cleared = []
    for row in fox_matrix(G).rows:
        nonzero = [f.min_exponents() for f in row if not f.is_zero()]
        if not nonzero:
            cleared.append(list(row))
            continue
        low = [min(exps[i] for exps in nonzero) for i in range(G.ngens)]
        cleared.append([f.shifted([-e for e in low]) for f in row])
    return cleared


def substituted_fox_rows(G: GroupPresentation) -> List[List[MultiPoly]]:
    """
    Cleared Fox rows with t_i = 1 + x_i.

    Raises:
        NotACycleError: if some row violates sum_j a_j x_j = 0
    """
    ring = poly_ring(G.ngens)
    rows = []
    for pos, row in enumerate(cleared_fox_rows(G)):
        poly_row = [f.to_multipoly(ring) for f in row]
        if G.ngens and any(koszul_apply(G.ngens, 1, poly_row, ring)):
            raise NotACycleError(f"Fox row of relator {pos} fails the fundamental identity")
        rows.append(poly_row)
    return rows


def koszul_columns(n: int) -> List[Column]:
    """Columns of delta_3 as vectors over the pairs i < j."""
    if n < 3:
        return []
    matrix = koszul_differential(n, 3)
    ring = poly_ring(n)
    columns: List[List[MultiPoly]] = [[ring.zero] * matrix.nrows for _ in range(matrix.ncols)]
    for (r, c), value in matrix.entries.items():
        columns[c][r] = value
    return [tuple(col) for col in columns]


def alexander_presentation(G: GroupPresentation, lift: Lift = koszul_lift) -> ModulePresentation:
    """
    Presentation [delta_3 | nu] of the Alexander invariant of G.

    Any lift with delta_2(nu(v)) = v presents the same module: two lifts
    differ by a cycle in im delta_3, which is already among the columns.

    Raises:
        NotCommutatorRelatorsError: if G has a relator of weight 1
        NotACycleError: if a substituted Fox row is not a Koszul cycle
    """
    n = G.ngens
    ring = poly_ring(max(n, 1))
    columns: List[Column] = koszul_columns(n)
    for row in substituted_fox_rows(G):
        if n >= 2:
            columns.append(tuple(lift(row, ring)))
    module = ModulePresentation(n, comb(n, 2), tuple(columns), "alexander", G.name)
    logger.debug(
        "built Alexander presentation",
        extra={"group": G.name, "rank": module.rank, "columns": module.ncols},
    )
    return module


def column_initial_form(column: Sequence[MultiPoly]) -> Column:
    """Lowest-degree homogeneous part of a column, taken jointly over its entries."""
    low = min(order_of(f) for f in column if f)
    return tuple(homogeneous_component(f, low) for f in column)


def linearized_presentation(M: ModulePresentation) -> ModulePresentation:
    """
    Per-column initial forms of an Alexander presentation.

    delta_3 columns are linear and pass through unchanged; a nu column
    contributes its constant part, the quadratic relator of the holonomy
    Lie algebra.

    Raises:
        ProvenanceError: if M is not an Alexander presentation
    """
    if M.provenance != "alexander":
        raise ProvenanceError(f"cannot linearize a {M.provenance} presentation")
    columns = tuple(column_initial_form(col) for col in M.columns)
    return ModulePresentation(M.nvars, M.rank, columns, "linearized", M.label)
