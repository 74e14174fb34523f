"""Tests for two-step cohomology algebras."""

from fractions import Fraction

import pytest

from grlie.services.cohomology.algebra import (
    TwoStepAlgebra,
    algebra_family,
    arnold,
    beer_vP,
    beer_vP_plus,
    coproduct_algebra,
    exterior_algebra,
    free_algebra,
    presentation_algebra,
    quadratic_algebra,
    relation_vector,
    tensor_algebra,
)
from grlie.services.cohomology.exceptions import RelationShapeError, UnknownAlgebraError
from grlie.services.cohomology.poincare import poincare_closed
from grlie.services.groups.families import abelian, free, vP


@pytest.mark.parametrize("A,family,n", [
    (arnold(3), "P", 3),
    (arnold(4), "P", 4),
    (beer_vP(3), "vP", 3),
    (beer_vP_plus(3), "vP_plus", 3),
    (beer_vP_plus(4), "vP_plus", 4),
])
def test_betti_numbers_match_poincare_polynomials(A, family, n):
    """b1 and b2 of the quadratic presentations agree with the closed forms."""
    assert [1, A.b1, A.b2] == poincare_closed(family, n)[:3]


def test_names_and_labels():
    """Algebras carry family names and pair labels."""
    A = arnold(3)
    assert A.name == "P3"
    assert A.basis1 == ("e12", "e13", "e23")
    assert A.top_degree == 2
    assert A.top_degree_at_most_two
    assert A.euler_characteristic == 0
    assert beer_vP(3).basis1[3:] == ("e21", "e31", "e32")


def test_exterior_and_free_algebras():
    """Z^k has every product; F_n has none."""
    Z = exterior_algebra(2)
    assert Z.basis2 == ("e1*e2",)
    assert Z.product(0, 1) == (Fraction(1),)
    assert Z.product(1, 0) == (Fraction(-1),)
    assert Z.product(1, 1) == (Fraction(0),)
    assert Z.top_degree == 2
    F = free_algebra(3)
    assert (F.b1, F.b2) == (3, 0)
    assert F.euler_characteristic == -2


def test_quadratic_algebra_quotient():
    """One relation e1 e2 = e1 e3 leaves two degree-2 classes."""
    A = quadratic_algebra(3, [relation_vector(3, [(1, 0, 1), (-1, 0, 2)])])
    assert A.b2 == 2
    assert A.product(0, 1) == A.product(0, 2)
    assert A.product(1, 2) != A.product(0, 1)


def test_relation_vector_signs():
    """e_b e_a = -e_a e_b and squares vanish."""
    assert relation_vector(3, [(2, 2, 0), (5, 1, 1)]) == [0, -2, 0]


def test_quadratic_algebra_rejects_bad_shape():
    """Relations must have one entry per pair."""
    with pytest.raises(RelationShapeError):
        quadratic_algebra(3, [[1, 0]])
    with pytest.raises(RelationShapeError):
        TwoStepAlgebra(("a", "b"), ("c",), ((1, 0),))


def test_tensor_and_coproduct():
    """Cross products survive in the tensor product only."""
    F1 = free_algebra(1)
    tensor = tensor_algebra(F1, F1)
    assert (tensor.b1, tensor.b2) == (2, 1)
    assert tensor.product(0, 1) == (Fraction(1),)
    assert tensor.top_degree == 2
    wedge = coproduct_algebra(exterior_algebra(2), F1)
    assert (wedge.b1, wedge.b2) == (3, 1)
    assert wedge.product(0, 2) == (Fraction(0),)


def test_presentation_algebra():
    """The algebra dual to initial forms recovers the cohomology."""
    assert presentation_algebra(abelian(3)).b2 == 3
    assert presentation_algebra(free(2)).b2 == 0
    A = presentation_algebra(vP(3))
    assert (A.b1, A.b2) == (6, 6)
    assert A.basis2 == ("r1", "r2", "r3", "r4", "r5", "r6")


def test_json_round_trip():
    """Documents keep exact rational entries."""
    A = beer_vP_plus(3)
    again = TwoStepAlgebra.from_json(A.to_json())
    assert again == A


def test_algebra_family_lookup():
    """Family names map to builders."""
    assert algebra_family("abelian", 3).b2 == 3
    with pytest.raises(UnknownAlgebraError):
        algebra_family("heisenberg", 3)
    with pytest.raises(UnknownAlgebraError):
        algebra_family("free", 0)
