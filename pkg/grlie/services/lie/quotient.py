"""
Graded dimensions and Chen ranks of finitely presented graded Lie algebras.

The ideal J generated by the relators is built degree by degree:
J_k = R_k + [L_1, J_(k-1)], where R_k are the degree-k relators. Each layer
is reduced to an independent set by certified modular elimination on
Lyndon-word coordinates, and phi_k = witt(n, k) - dim J_k.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from grlie.config import settings
from grlie.services.lie.hall import (
    LieElement,
    WordT,
    bracket,
    bracket_generator,
    check_budget,
    hall_expand,
    lyndon_index,
    lyndon_projection,
)
from grlie.services.lie.presentation import LiePresentation
from grlie.services.numeric.elimination import certified_elimination, certified_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of the degree-k pieces for k = 1..K."""

    label: str
    dims: Tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError("graded dimensions are non-negative")

    def pairs(self) -> List[Tuple[int, int]]:
        return [(k, d) for k, d in enumerate(self.dims, start=1)]

    def __getitem__(self, k: int) -> int:
        """Dimension in degree k, 1-based."""
        return self.dims[k - 1]

    def as_list(self) -> List[int]:
        return list(self.dims)


class LieQuotient:
    """
    Degree-by-degree model of L(n) / J for a LiePresentation.

    Layers are computed lazily and cached on the instance.
    """

    def __init__(self, presentation: LiePresentation, budget: Optional[int] = None, **elimination):
        self.presentation = presentation
        self.n = presentation.ngens
        self.budget = settings.GRLIE_HALL_BUDGET if budget is None else budget
        self.elimination = {**settings.get_service_config("numeric"), **elimination}
        self._layers: Dict[int, List[LieElement]] = {1: []}
        self._rows: Dict[int, List[Dict[int, int]]] = {1: []}
        self._pivots: Dict[int, Tuple[int, ...]] = {1: ()}

    def free_dim(self, k: int) -> int:
        return check_budget(self.n, k, self.budget)

    def ideal_layer(self, k: int) -> List[LieElement]:
        """Independent tensor expansions spanning J_k."""
        if k in self._layers:
            return self._layers[k]
        previous = self.ideal_layer(k - 1)
        free_dim = self.free_dim(k)

        candidates = [r.integral_expansion() for r in self.presentation.relators_of_degree(k)]
        candidates.extend(bracket_generator(i, b) for b in previous for i in range(self.n))
        index = lyndon_index(self.n, k)
        rows = [lyndon_projection(c, index) for c in candidates]
        result = certified_elimination(rows, **self.elimination)

        self._layers[k] = [candidates[i] for i in result.independent_rows]
        self._rows[k] = [rows[i] for i in result.independent_rows]
        self._pivots[k] = result.pivot_columns
        logger.info(
            "computed Lie ideal layer",
            extra={"degree": k, "free_dim": free_dim, "ideal_rank": result.rank, "method": result.method},
        )
        return self._layers[k]

    def dim(self, k: int) -> int:
        """phi_k of the quotient."""
        if k == 1:
            return self.n
        return self.free_dim(k) - len(self.ideal_layer(k))

    def complement_words(self, k: int) -> List[WordT]:
        """Lyndon words whose Hall elements span a complement of J_k."""
        self.ideal_layer(k)
        pivots = set(self._pivots[k])
        return [w for w, col in lyndon_index(self.n, k).items() if col not in pivots]

    def derived_rank(self, k: int) -> int:
        """dim of the degree-k part of [g', g'] in the quotient."""
        if k < 4:
            return 0
        self.ideal_layer(k)
        ideal_rows = self._rows[k]
        index = lyndon_index(self.n, k)
        brackets: List[Dict[int, int]] = []
        for p in range(2, k // 2 + 1):
            q = k - p
            left = self.complement_words(p)
            right = self.complement_words(q)
            for a, u in enumerate(left):
                start = a + 1 if p == q else 0
                for v in right[start:]:
                    brackets.append(lyndon_projection(bracket(hall_expand(u), hall_expand(v)), index))
        if not brackets:
            return 0
        combined = certified_rank(list(ideal_rows) + brackets, **self.elimination)
        return combined - len(ideal_rows)

    def chen_dim(self, k: int) -> int:
        """theta_k of the quotient."""
        if k == 1:
            return self.n
        value = self.dim(k) - self.derived_rank(k)
        logger.info("computed Chen rank", extra={"degree": k, "theta": value})
        return value


def graded_dims(L: LiePresentation, K: int, budget: Optional[int] = None, **elimination) -> GradedDims:
    """
    phi_1..phi_K of the quotient Lie algebra.

    Raises:
        ResourceBudgetError: if a free Lie layer exceeds the Hall budget
    """
    quotient = LieQuotient(L, budget, **elimination)
    return GradedDims(L.name, tuple(quotient.dim(k) for k in range(1, K + 1)))


def chen_dims(L: LiePresentation, K: int, budget: Optional[int] = None, **elimination) -> GradedDims:
    """
    theta_1..theta_K: dimensions of g / g'' for g the quotient Lie algebra.

    Raises:
        ResourceBudgetError: if a free Lie layer exceeds the Hall budget
    """
    quotient = LieQuotient(L, budget, **elimination)
    return GradedDims(L.name, tuple(quotient.chen_dim(k) for k in range(1, K + 1)))
