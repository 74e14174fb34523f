"""
Resonance varieties R^1_d(A) as determinantal loci of the Aomoto matrix.

For a != 0, b1(A, a) >= d iff rank(delta^1_a) <= b1 - d - 1, i.e. iff all
minors of size b1 - d vanish at a. The origin lies in R^1_d iff d <= b1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from grlie.config import settings
from grlie.services.cohomology.algebra import TwoStepAlgebra
from grlie.services.groebner.ideal import Ideal, krull_dimension
from grlie.services.numeric.elimination import eliminate
from grlie.services.numeric.matrices import SparseMatrix, generic_rank, minors, nullspace
from grlie.services.numeric.polynomials import MultiPoly, evaluate, poly_from_terms, poly_ring, poly_terms
from grlie.services.numeric.sampling import make_rng, sample_nonzero_point
from grlie.services.resonance.aomoto import aomoto_b1, aomoto_matrix, coordinate_ring, product_table
from grlie.services.resonance.exceptions import DepthError, ResonanceError

logger = logging.getLogger(__name__)


def _check_depth(A: TwoStepAlgebra, d: int) -> None:
    if not 1 <= d <= A.b1:
        raise DepthError(f"depth {d} outside 1..{A.b1}")


def minor_size(A: TwoStepAlgebra, d: int) -> int:
    return A.b1 - d


def _linear_basis(polys: Sequence[MultiPoly]) -> List[MultiPoly]:
    """A subset of ``polys`` that is a basis of their QQ-span."""
    monomials: Dict[Tuple[int, ...], int] = {}
    rows = []
    for f in polys:
        rows.append({monomials.setdefault(exp, len(monomials)): c for exp, c in poly_terms(f).items()})
    return [polys[i] for i in eliminate(rows).independent_rows]


def resonance_ideal(A: TwoStepAlgebra, d: int) -> Ideal:
    """
    Ideal of the (b1 - d)-minors of the Aomoto matrix.

    Minors are reduced to a basis of their linear span. When the minor size
    is below 1 the zero ideal is returned (the variety is all of A^1); when it
    exceeds the matrix the minors are empty and the ideal is zero as well.

    Raises:
        DepthError: if d is outside 1..b1
    """
    _check_depth(A, d)
    ring = coordinate_ring(A)
    size = minor_size(A, d)
    if size < 1:
        logger.warning("minor size below 1; resonance variety is the whole space", extra={"depth": d})
        return Ideal(ring, ())
    matrix = aomoto_matrix(A, ring)
    if size > min(matrix.nrows, matrix.ncols):
        return Ideal(ring, ())
    generators = _linear_basis(minors(matrix, size))
    logger.info(
        "built resonance ideal",
        extra={"algebra": A.name, "depth": d, "minor_size": size, "generators": len(generators)},
    )
    return Ideal(ring, tuple(generators))


def resonance_dimension(A: TwoStepAlgebra, d: int) -> int:
    return krull_dimension(resonance_ideal(A, d))


def in_variety(I: Ideal, point: Sequence) -> bool:
    return all(evaluate(g, point) == 0 for g in I.generators)


def in_resonance(A: TwoStepAlgebra, a: Sequence, d: int) -> bool:
    """Pointwise test by rank: the origin lies in R^1_d iff d <= b1."""
    if not any(a):
        return d <= A.b1
    return aomoto_b1(A, a) >= d


@dataclass(frozen=True)
class LinearSubspaceParam:
    """Linear subspace of A^1 spanned by independent rational vectors."""

    ambient: int
    vectors: Tuple[Tuple[Fraction, ...], ...]
    name: str = ""

    def __post_init__(self):
        vectors = tuple(tuple(Fraction(c) for c in v) for v in self.vectors)
        if any(len(v) != self.ambient for v in vectors):
            raise ResonanceError(f"spanning vectors must have length {self.ambient}")
        rows = [{i: c for i, c in enumerate(v) if c} for v in vectors]
        if eliminate(rows).rank != len(vectors):
            raise ResonanceError("spanning vectors are linearly dependent")
        object.__setattr__(self, "vectors", vectors)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def point(self, params: Sequence) -> List[Fraction]:
        """sum_l s_l v_l."""
        out = [Fraction(0)] * self.ambient
        for s, v in zip(params, self.vectors):
            for i, c in enumerate(v):
                out[i] += Fraction(s) * c
        return out


def subspace_from_equations(
    b1: int, equations: Sequence[Sequence], name: str = ""
) -> LinearSubspaceParam:
    """The null space of a list of linear forms, given by coefficient vectors."""
    if not equations:
        basis = [[Fraction(int(i == j)) for j in range(b1)] for i in range(b1)]
    else:
        basis = nullspace(SparseMatrix.from_rows(equations, ncols=b1))
    return LinearSubspaceParam(b1, tuple(tuple(v) for v in basis), name)


def line(vector: Sequence, name: str = "") -> LinearSubspaceParam:
    return LinearSubspaceParam(len(vector), (tuple(vector),), name)


def restricted_aomoto(A: TwoStepAlgebra, L: LinearSubspaceParam) -> SparseMatrix:
    """delta^1 along a = sum_l s_l v_l, with entries linear in s_1..s_dim."""
    if L.ambient != A.b1:
        raise ResonanceError(f"subspace lives in dimension {L.ambient}, A^1 has {A.b1}")
    ring = poly_ring(tuple(f"s{l + 1}" for l in range(L.dimension)))
    table = product_table(A)
    entries = {}
    for r in range(A.b2):
        for j in range(A.b1):
            terms = {}
            for l, v in enumerate(L.vectors):
                c = sum(v[i] * table[r][j][i] for i in range(A.b1))
                if c:
                    terms[tuple(int(k == l) for k in range(L.dimension))] = c
            if terms:
                entries[(r, j)] = poly_from_terms(ring, terms)
    return SparseMatrix(A.b2, A.b1, entries, ring.to_domain())


def subspace_in_resonance(
    A: TwoStepAlgebra, L: LinearSubspaceParam, d: int, method: str = "rank"
) -> bool:
    """
    Whether L lies in R^1_d(A).

    ``rank`` compares the rank of the restricted Aomoto matrix over QQ(s)
    with b1 - d; ``minors`` expands every (b1 - d)-minor and checks that it
    vanishes identically. Both decide the same question.
    """
    _check_depth(A, d)
    size = minor_size(A, d)
    if size < 1:
        return True
    matrix = restricted_aomoto(A, L)
    if size > min(matrix.nrows, matrix.ncols):
        return True
    if method == "rank":
        result = generic_rank(matrix) < size
    elif method == "minors":
        result = not minors(matrix, size)
    else:
        raise ResonanceError(f"unknown method {method!r}")
    logger.debug("tested subspace", extra={"subspace": L.name, "depth": d, "contained": result})
    return result


@dataclass(frozen=True)
class DepthSample:
    """Aomoto Betti numbers at sampled nonzero points of a subspace."""

    subspace: str
    depths: Tuple[int, ...]

    @property
    def max_depth(self) -> int:
        return max(self.depths, default=0)

    def reaches(self, d: int) -> bool:
        return self.max_depth >= d


def sample_depth(
    A: TwoStepAlgebra,
    L: LinearSubspaceParam,
    samples: int,
    seed: Optional[int] = None,
    sample_range: Optional[int] = None,
) -> DepthSample:
    """b1(A, a) at ``samples`` seeded random nonzero points a of L."""
    config = settings.get_service_config("resonance")
    seed = config["seed"] if seed is None else seed
    bound = config["sample_range"] if sample_range is None else sample_range
    rng = make_rng(seed, f"depth:{A.name}:{L.name}")
    depths = []
    for _ in range(samples):
        point = L.point(sample_nonzero_point(L.dimension, rng, bound))
        if any(point):
            depths.append(aomoto_b1(A, point))
    return DepthSample(L.name, tuple(depths))


@dataclass(frozen=True)
class ResonanceSummary:
    """Depth, ideal, dimension and verified components of R^1_d(A)."""

    depth: int
    ideal_generators: Tuple[str, ...]
    dimension: Optional[int]
    verified_components: Tuple[str, ...]

    def to_dict(self) -> Dict:
        return {
            "depth": self.depth,
            "ideal_generators": list(self.ideal_generators),
            "dimension": self.dimension,
            "verified_components": list(self.verified_components),
        }


def resonance_report(
    A: TwoStepAlgebra,
    d: int,
    candidates: Optional[Mapping[str, LinearSubspaceParam]] = None,
    with_dimension: bool = True,
) -> ResonanceSummary:
    """Resonance ideal and its dimension, plus the candidates that lie in R^1_d."""
    I = resonance_ideal(A, d)
    dimension = krull_dimension(I) if with_dimension else None
    verified = tuple(
        name for name, L in (candidates or {}).items() if subspace_in_resonance(A, L, d)
    )
    return ResonanceSummary(d, tuple(str(g.as_expr()) for g in I.generators), dimension, verified)
