"""Tests for Aomoto matrices and pointwise Betti numbers."""

import pytest

from grlie.services.cohomology.algebra import beer_vP, exterior_algebra, tensor_algebra
from grlie.services.cohomology.exceptions import TopDegreeError
from grlie.services.resonance.aomoto import (
    aomoto_at,
    aomoto_b1,
    aomoto_b2,
    aomoto_matrix,
    aomoto_rank,
    coordinate_names,
    coordinate_ring,
    product_table,
    same_row_space,
)


def test_coordinate_names_follow_basis_labels(torus):
    """Indexed labels give x-coordinates; clashes fall back to x1..xn."""
    assert coordinate_names(torus) == ("x1", "x2")
    assert coordinate_names(beer_vP(3)) == ("x12", "x13", "x23", "x21", "x31", "x32")
    assert coordinate_names(tensor_algebra(torus, torus)) == ("x1", "x2", "x3", "x4")


def test_product_table_is_antisymmetric(torus):
    table = product_table(torus)
    assert table[0][1][0] == 1
    assert table[0][0][1] == -1
    assert table[0][0][0] == 0


def test_aomoto_matrix_of_torus(torus):
    """delta^1 of Z^2 is the row (-x2, x1)."""
    ring = coordinate_ring(torus)
    x1, x2 = ring.gens
    M = aomoto_matrix(torus, ring)
    assert M.shape == (1, 2)
    assert M.to_dense() == [[-x2, x1]]
    assert same_row_space(M, [[x2, -x1]])
    assert not same_row_space(M, [[x1, x2]])


def test_aomoto_at_and_rank(torus):
    assert aomoto_rank(torus, [1, 0]) == 1
    assert aomoto_rank(torus, [0, 0]) == 0
    with pytest.raises(ValueError):
        aomoto_at(torus, [1, 2, 3])


def test_b1_on_torus_and_free_group(torus, free2):
    """Z^2 has no resonance away from 0; every nonzero point of F_2 has depth 1."""
    assert aomoto_b1(torus, [0, 0]) == 2
    assert aomoto_b1(torus, [3, -1]) == 0
    assert aomoto_b1(free2, [0, 0]) == 2
    assert aomoto_b1(free2, [1, 5]) == 1


def test_b1_on_vp3plus(vp3plus):
    """The line e12 - e13 + e23 annihilates A^1."""
    assert aomoto_b1(vp3plus, [1, -1, 1]) == 2
    assert aomoto_b1(vp3plus, [1, 0, 0]) == 1


def test_b2_needs_top_degree_two(vp3plus):
    assert aomoto_b2(vp3plus, [0, 0, 0]) == 1
    assert aomoto_b2(vp3plus, [1, 0, 0]) == 0
    assert aomoto_b2(vp3plus, [2, -2, 2]) == 1
    with pytest.raises(TopDegreeError):
        aomoto_b2(exterior_algebra(3), [1, 0, 0])


def test_vp3_line_has_depth_five():
    """e12 - e21 - e13 + e31 + e23 - e32 multiplies A^1 to zero."""
    A = beer_vP(3)
    assert aomoto_rank(A, [1, -1, 1, -1, 1, -1]) == 0
    assert aomoto_b1(A, [1, -1, 1, -1, 1, -1]) == 5
