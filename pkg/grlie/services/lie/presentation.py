"""
Finitely presented graded Lie algebras with degree-1 generators.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Mapping, Sequence, Tuple, Union

from grlie.services.cohomology.algebra import TwoStepAlgebra
from grlie.services.groups.fox import initial_forms, is_commutator_relators
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.lie.exceptions import NonHomogeneousRelatorError, WeightOneRelatorError
from grlie.services.lie.hall import LieElement, WordT, combination_expand, is_lyndon
from grlie.services.numeric.exterior import pairs

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class LieRelator:
    """Homogeneous combination of Hall elements, keyed by Lyndon word."""

    coefficients: Mapping[WordT, Fraction]

    def __post_init__(self):
        coeffs = {tuple(w): Fraction(c) for w, c in self.coefficients.items() if c}
        if not coeffs:
            raise NonHomogeneousRelatorError("relator is zero")
        degrees = {len(w) for w in coeffs}
        if len(degrees) != 1:
            raise NonHomogeneousRelatorError(f"relator mixes degrees {sorted(degrees)}")
        for w in coeffs:
            if not is_lyndon(w):
                raise NonHomogeneousRelatorError(f"{w} is not a Hall (Lyndon) word")
        if min(degrees) < 2:
            raise WeightOneRelatorError("relators must have degree >= 2")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(next(iter(self.coefficients)))

    def integral_expansion(self) -> LieElement:
        """Tensor expansion scaled to integer coefficients."""
        scale = lcm(*(c.denominator for c in self.coefficients.values()))
        return combination_expand({w: int(c * scale) for w, c in self.coefficients.items()})


@dataclass(frozen=True)
class LiePresentation:
    """Free Lie algebra on ``ngens`` degree-1 generators modulo homogeneous relators."""

    ngens: int
    relators: Tuple[LieRelator, ...] = ()
    labels: Tuple[str, ...] = field(default=())
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.ngens)))
        for rel in self.relators:
            if any(g >= self.ngens for w in rel.coefficients for g in w):
                raise NonHomogeneousRelatorError("relator uses a generator outside the presentation")

    def relators_of_degree(self, k: int) -> List[LieRelator]:
        return [r for r in self.relators if r.degree == k]


def quadratic_relators(n: int, vectors: Sequence[Sequence[Number]]) -> List[LieRelator]:
    """sum_{i<j} c_ij [x_i, x_j] for each nonzero vector over the pairs i < j."""
    plist = pairs(n)
    out = []
    for vec in vectors:
        coeffs = {plist[c]: Fraction(v) for c, v in enumerate(vec) if v}
        if coeffs:
            out.append(LieRelator(coeffs))
    return out


def free_lie_presentation(n: int) -> LiePresentation:
    return LiePresentation(n, (), name=f"L{n}")


def holonomy_presentation(A: TwoStepAlgebra) -> LiePresentation:
    """
    Holonomy Lie algebra of a two-step algebra.

    The relators span the image of the transpose of the cup map: one relator
    per row of the cup matrix, so the relator span has rank b2.
    """
    relators = quadratic_relators(A.b1, A.cup)
    logger.debug("built holonomy presentation", extra={"algebra": A.name, "relators": len(relators)})
    return LiePresentation(A.b1, tuple(relators), A.basis1, f"h({A.name})")


def initial_form_presentation(G: GroupPresentation) -> LiePresentation:
    """
    Lie algebra presented by the quadratic initial forms of G's relators.

    Raises:
        WeightOneRelatorError: if some relator has nonzero exponent sum
        NonHomogeneousRelatorError: if some relator has zero initial form
    """
    if not is_commutator_relators(G):
        raise WeightOneRelatorError(f"{G.name or 'presentation'} has a relator of weight 1")
    forms = initial_forms(G)
    for pos, form in enumerate(forms):
        if not any(form):
            raise NonHomogeneousRelatorError(f"relator {pos} has weight > 2")
    return LiePresentation(G.ngens, tuple(quadratic_relators(G.ngens, forms)), G.generators, f"L({G.name})")
