"""
Two-step truncations A^0 + A^1 + A^2 of graded-commutative algebras.

The cup map sends the basis e_i ^ e_j (pairs i < j in lexicographic order)
of the exterior square of A^1 to A^2. Quadratic algebras take A^2 to be the
quotient of the exterior square by a relation span, with the degree-2 basis
given by the non-pivot columns of the reduced relation matrix.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from grlie.models.algebra import AlgebraDocument
from grlie.services.cohomology.exceptions import RelationShapeError, UnknownAlgebraError
from grlie.services.groups.families import upper_pairs
from grlie.services.groups.fox import initial_forms
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.numeric.elimination import eliminate
from grlie.services.numeric.exterior import pair_index, pairs
from grlie.services.numeric.matrices import SparseMatrix, rref

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class TwoStepAlgebra:
    """
    Bases of A^1 and A^2 and the cup map as a b2 x C(b1, 2) matrix.

    ``top_degree`` is the highest nonzero degree when it is known.
    """

    basis1: Tuple[str, ...]
    basis2: Tuple[str, ...]
    cup: Tuple[Vector, ...]
    top_degree: Optional[int] = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "basis1", tuple(self.basis1))
        object.__setattr__(self, "basis2", tuple(self.basis2))
        cup = tuple(tuple(Fraction(c) for c in row) for row in self.cup)
        width = len(pairs(self.b1))
        if len(cup) != len(self.basis2) or any(len(row) != width for row in cup):
            raise RelationShapeError(f"cup matrix must be {len(self.basis2)} x {width}")
        object.__setattr__(self, "cup", cup)

    @property
    def b1(self) -> int:
        return len(self.basis1)

    @property
    def b2(self) -> int:
        return len(self.basis2)

    @property
    def top_degree_at_most_two(self) -> bool:
        return self.top_degree is not None and self.top_degree <= 2

    @property
    def euler_characteristic(self) -> int:
        """1 - b1 + b2; the Euler characteristic when the top degree is at most 2."""
        return 1 - self.b1 + self.b2

    def product(self, i: int, j: int) -> Vector:
        """e_i e_j expressed in the A^2 basis."""
        if i == j:
            return (Fraction(0),) * self.b2
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        col = pair_index(self.b1)[(i, j)]
        return tuple(sign * row[col] for row in self.cup)

    def cup_matrix(self) -> SparseMatrix:
        return SparseMatrix.from_rows(self.cup, ncols=len(pairs(self.b1)))

    def to_document(self) -> AlgebraDocument:
        return AlgebraDocument(
            name=self.name,
            basis1=list(self.basis1),
            basis2=list(self.basis2),
            cup=[[str(c) for c in row] for row in self.cup],
            top_degree=self.top_degree,
        )

    def to_json(self) -> str:
        return self.to_document().model_dump_json()

    @classmethod
    def from_document(cls, doc: AlgebraDocument) -> "TwoStepAlgebra":
        cup = tuple(tuple(Fraction(c) for c in row) for row in doc.cup)
        return cls(tuple(doc.basis1), tuple(doc.basis2), cup, doc.top_degree, doc.name)

    @classmethod
    def from_json(cls, text: str) -> "TwoStepAlgebra":
        return cls.from_document(AlgebraDocument.model_validate_json(text))


def default_labels(n: int) -> Tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


def _degree2_labels(labels: Sequence[str], columns: Iterable[int]) -> Tuple[str, ...]:
    plist = pairs(len(labels))
    return tuple(f"{labels[plist[c][0]]}*{labels[plist[c][1]]}" for c in columns)


def relation_vector(b1: int, terms: Iterable[Tuple[Number, int, int]]) -> List[Fraction]:
    """Vector in the exterior square for sum of coeff * e_a e_b (any a, b)."""
    index = pair_index(b1)
    vec = [Fraction(0)] * len(index)
    for coeff, a, b in terms:
        if a == b:
            continue
        if a < b:
            vec[index[(a, b)]] += coeff
        else:
            vec[index[(b, a)]] -= coeff
    return vec


def quadratic_algebra(
    b1: int,
    relations: Sequence[Sequence[Number]],
    labels: Optional[Sequence[str]] = None,
    top_degree: Optional[int] = None,
    name: str = "",
) -> TwoStepAlgebra:
    """
    A^2 = exterior square of A^1 modulo the span of ``relations``.

    Args:
        b1: dimension of A^1
        relations: vectors of length C(b1, 2) over the pairs i < j
        labels: names of the A^1 basis (default e1..en)

    Returns:
        TwoStepAlgebra whose A^2 basis is the non-pivot pair columns

    Raises:
        RelationShapeError: if a relation has the wrong length
    """
    width = b1 * (b1 - 1) // 2
    for pos, rel in enumerate(relations):
        if len(rel) != width:
            raise RelationShapeError(f"relation {pos} has length {len(rel)}, expected {width}")
    labels = tuple(labels) if labels is not None else default_labels(b1)

    reduced, pivots = rref(SparseMatrix.from_rows([list(r) for r in relations], ncols=width))
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    position = {c: k for k, c in enumerate(free)}

    cup = [[Fraction(0)] * width for _ in free]
    for c in free:
        cup[position[c]][c] = Fraction(1)
    for row, p in zip(reduced, pivots):
        for c, value in row.items():
            if c in position:
                cup[position[c]][p] = -value

    algebra = TwoStepAlgebra(labels, _degree2_labels(labels, free), tuple(map(tuple, cup)), top_degree, name)
    logger.debug("built quadratic algebra", extra={"algebra": name, "b1": b1, "b2": algebra.b2})
    return algebra


def _pair_names(pairs_: Sequence[Tuple[int, int]], n: int) -> Tuple[str, ...]:
    if n < 10:
        return tuple(f"e{i + 1}{j + 1}" for i, j in pairs_)
    return tuple(f"e{i + 1}_{j + 1}" for i, j in pairs_)


def arnold(n: int) -> TwoStepAlgebra:
    """Cohomology of P_n: a_ik a_jk = a_ij (a_jk - a_ik) for i < j < k."""
    gens = upper_pairs(n)
    g = {pair: pos for pos, pair in enumerate(gens)}
    b1 = len(gens)
    relations = []
    for k in range(n):
        for j in range(k):
            for i in range(j):
                relations.append(relation_vector(b1, [
                    (1, g[(i, k)], g[(j, k)]),
                    (-1, g[(i, j)], g[(j, k)]),
                    (1, g[(i, j)], g[(i, k)]),
                ]))
    return quadratic_algebra(b1, relations, _pair_names(gens, n), n - 1, f"P{n}")


def beer_vP(n: int) -> TwoStepAlgebra:
    """
    Cohomology of vP_n on ordered pairs: a_ij a_ji = 0 and, for i, j, k distinct,
    a_ij a_ik = a_ij a_jk - a_ik a_kj and a_ik a_jk = a_ij a_jk - a_ji a_ik.
    """
    upper = upper_pairs(n)
    gens = upper + [(j, i) for i, j in upper]
    g = {pair: pos for pos, pair in enumerate(gens)}
    b1 = len(gens)
    relations = [relation_vector(b1, [(1, g[(i, j)], g[(j, i)])]) for i, j in upper]
    for i, j, k in permutations(range(n), 3):
        relations.append(relation_vector(b1, [
            (1, g[(i, j)], g[(i, k)]),
            (-1, g[(i, j)], g[(j, k)]),
            (1, g[(i, k)], g[(k, j)]),
        ]))
        relations.append(relation_vector(b1, [
            (1, g[(i, k)], g[(j, k)]),
            (-1, g[(i, j)], g[(j, k)]),
            (1, g[(j, i)], g[(i, k)]),
        ]))
    return quadratic_algebra(b1, relations, _pair_names(gens, n), n - 1, f"vP{n}")


def beer_vP_plus(n: int) -> TwoStepAlgebra:
    """Cohomology of vP_n^+: e_ij (e_ik - e_jk) = 0 and (e_ij - e_ik) e_jk = 0 for i < j < k."""
    gens = upper_pairs(n)
    g = {pair: pos for pos, pair in enumerate(gens)}
    b1 = len(gens)
    relations = []
    for k in range(n):
        for j in range(k):
            for i in range(j):
                relations.append(relation_vector(b1, [(1, g[(i, j)], g[(i, k)]), (-1, g[(i, j)], g[(j, k)])]))
                relations.append(relation_vector(b1, [(1, g[(i, j)], g[(j, k)]), (-1, g[(i, k)], g[(j, k)])]))
    return quadratic_algebra(b1, relations, _pair_names(gens, n), n - 1, f"vP{n}plus")


def free_algebra(n: int) -> TwoStepAlgebra:
    """Cohomology of F_n: every product vanishes."""
    width = n * (n - 1) // 2
    relations = [[1 if c == r else 0 for c in range(width)] for r in range(width)]
    return quadratic_algebra(n, relations, top_degree=1, name=f"F{n}")


def exterior_algebra(k: int) -> TwoStepAlgebra:
    """Cohomology of Z^k: no relations."""
    return quadratic_algebra(k, [], top_degree=k, name=f"Z{k}")


ALGEBRAS = {
    "arnold": arnold,
    "beer_vP": beer_vP,
    "beer_vP_plus": beer_vP_plus,
    "free": free_algebra,
    "abelian": exterior_algebra,
}


def algebra_family(name: str, n: int) -> TwoStepAlgebra:
    """
    Built-in algebra by family name.

    Raises:
        UnknownAlgebraError: for an unknown name
    """
    builder = ALGEBRAS.get(name)
    if builder is None:
        raise UnknownAlgebraError(f"unknown algebra family {name!r}; expected one of {sorted(ALGEBRAS)}")
    if n < 1:
        raise UnknownAlgebraError(f"algebra family {name!r} needs n >= 1")
    return builder(n)


def _assemble(
    A: TwoStepAlgebra,
    B: TwoStepAlgebra,
    with_cross: bool,
    top_degree: Optional[int],
    name: str,
) -> TwoStepAlgebra:
    n = A.b1 + B.b1
    labels = A.basis1 + B.basis1
    cross = [(i, j) for i in range(A.b1) for j in range(B.b1)] if with_cross else []
    basis2 = A.basis2 + tuple(f"{A.basis1[i]}*{B.basis1[j]}" for i, j in cross) + B.basis2
    cross_pos = {pair: A.b2 + k for k, pair in enumerate(cross)}
    b_offset = A.b2 + len(cross)
    a_index, b_index = pair_index(A.b1), pair_index(B.b1)

    cup = [[Fraction(0)] * len(pairs(n)) for _ in basis2]
    for col, (p, q) in enumerate(pairs(n)):
        if q < A.b1:
            source = a_index[(p, q)]
            for r in range(A.b2):
                cup[r][col] = A.cup[r][source]
        elif p >= A.b1:
            source = b_index[(p - A.b1, q - A.b1)]
            for r in range(B.b2):
                cup[b_offset + r][col] = B.cup[r][source]
        elif with_cross:
            cup[cross_pos[(p, q - A.b1)]][col] = Fraction(1)
    return TwoStepAlgebra(labels, basis2, tuple(map(tuple, cup)), top_degree, name)


def tensor_algebra(A: TwoStepAlgebra, B: TwoStepAlgebra) -> TwoStepAlgebra:
    """Truncation of A (x) B: degree 2 is A^2 + A^1 (x) B^1 + B^2."""
    top = A.top_degree + B.top_degree if A.top_degree is not None and B.top_degree is not None else None
    return _assemble(A, B, True, top, f"({A.name} (x) {B.name})")


def coproduct_algebra(A: TwoStepAlgebra, B: TwoStepAlgebra) -> TwoStepAlgebra:
    """Truncation of the wedge-sum algebra: cross products vanish."""
    top = max(A.top_degree, B.top_degree) if A.top_degree is not None and B.top_degree is not None else None
    return _assemble(A, B, False, top, f"({A.name} v {B.name})")


def presentation_algebra(G: GroupPresentation, top_degree: Optional[int] = None) -> TwoStepAlgebra:
    """
    Two-step algebra dual to the initial forms of a commutator-relators presentation.

    A^1 is dual to the generators; A^2 is dual to the span of the degree-2
    initial forms, with one basis element per independent relator, and the
    cup matrix rows are those initial forms.
    """
    forms = initial_forms(G)
    result = eliminate([{c: v for c, v in enumerate(row) if v} for row in forms])
    rows = tuple(tuple(Fraction(v) for v in forms[i]) for i in result.independent_rows)
    basis2 = tuple(f"r{i + 1}" for i in result.independent_rows)
    return TwoStepAlgebra(G.generators, basis2, rows, top_degree, G.name)
