"""Tests for the recorded resonance components."""

import pytest

from grlie.services.cohomology.algebra import beer_vP, beer_vP_plus
from grlie.services.numeric.polynomials import evaluate
from grlie.services.resonance.aomoto import aomoto_b1, aomoto_matrix, coordinate_ring, same_row_space
from grlie.services.resonance.catalog import (
    VP3_COMPONENT_EQUATIONS,
    VP3_LINE,
    VP4PLUS_LINES,
    candidate_components,
    vp3_components,
    vp3_line,
    vp4plus_aomoto_rows,
    vp4plus_equations,
    vp4plus_lines,
)
from grlie.services.resonance.varieties import subspace_in_resonance


def test_vp4plus_lines():
    lines = vp4plus_lines()
    assert len(lines) == 13
    assert all(L.dimension == 1 and L.ambient == 6 for L in lines.values())


def test_vp4plus_lines_satisfy_the_cubics():
    """R^1_2 sits inside R^1_1."""
    ring = coordinate_ring(beer_vP_plus(4))
    equations = vp4plus_equations(ring)
    assert len(equations) == 4
    for vector in VP4PLUS_LINES.values():
        assert all(evaluate(f, vector) == 0 for f in equations)


def test_printed_aomoto_matrix_matches():
    A = beer_vP_plus(4)
    ring = coordinate_ring(A)
    rows = vp4plus_aomoto_rows(ring)
    assert len(rows) == 7 and all(len(r) == 6 for r in rows)
    assert same_row_space(aomoto_matrix(A, ring), rows)


@pytest.mark.parametrize("name", ["e12", "e12-e13+e23"])
def test_vp4plus_lines_have_depth_two(name):
    A = beer_vP_plus(4)
    assert aomoto_b1(A, VP4PLUS_LINES[name]) == 2
    assert subspace_in_resonance(A, vp4plus_lines()[name], 2)


def test_vp3_components_contain_the_line():
    components = vp3_components()
    assert len(components) == 5
    assert all(L.dimension == 3 for L in components.values())
    for equations in VP3_COMPONENT_EQUATIONS.values():
        for eq in equations:
            assert sum(a * b for a, b in zip(eq, VP3_LINE)) == 0


def test_vp3_line_lies_in_depth_five():
    A = beer_vP(3)
    assert subspace_in_resonance(A, vp3_line(), 5)
    assert subspace_in_resonance(A, vp3_line(), 5, method="minors")


def test_candidate_components_lookup():
    assert len(candidate_components("vP4plus", 2)) == 13
    assert len(candidate_components("vP3", 2)) == 5
    assert list(candidate_components("vP3", 5)) == ["x12=-x21=-x13=x31=x23=-x32"]
    assert candidate_components("vP3", 1) == {}
    assert candidate_components("P4", 2) == {}


@pytest.mark.slow
def test_vp3_components_lie_in_depth_two():
    A = beer_vP(3)
    assert all(subspace_in_resonance(A, L, 2) for L in vp3_components().values())
