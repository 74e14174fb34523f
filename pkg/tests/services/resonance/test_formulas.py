"""Tests for the Betti number formula checks."""

from fractions import Fraction

import pytest

from grlie.services.cohomology.algebra import exterior_algebra
from grlie.services.cohomology.exceptions import TopDegreeError
from grlie.services.resonance.exceptions import ResonanceError
from grlie.services.resonance.formulas import (
    betti_formula_check,
    expected_coproduct_b1,
    expected_tensor_b1,
    lemma_resonance2_check,
)


def test_expected_tensor_b1(torus, free2):
    assert expected_tensor_b1(torus, free2, [0, 0], [0, 0]) == 4
    assert expected_tensor_b1(torus, free2, [1, 0], [0, 0]) == 0
    assert expected_tensor_b1(torus, free2, [0, 0], [1, 1]) == 1
    assert expected_tensor_b1(torus, free2, [1, 0], [1, 1]) == 0


def test_expected_coproduct_b1(torus, free2):
    assert expected_coproduct_b1(torus, free2, [0, 0], [0, 0]) == 4
    assert expected_coproduct_b1(torus, free2, [1, 0], [0, 0]) == 2
    assert expected_coproduct_b1(torus, free2, [0, 0], [1, 1]) == 3
    assert expected_coproduct_b1(torus, free2, [1, 0], [1, 1]) == 2


@pytest.mark.parametrize("pair", [("torus", "free2"), ("free2", "vp3plus"), ("vp3plus", "torus")])
def test_betti_formulas_hold(pair, request):
    A, B = (request.getfixturevalue(name) for name in pair)
    report = betti_formula_check(A, B, trials=8, seed=3)
    assert report.trials == 8
    assert report.holds, report.mismatches


def test_betti_formula_check_needs_trials(torus, free2):
    with pytest.raises(ResonanceError):
        betti_formula_check(torus, free2, trials=0)


def test_lemma_on_sampled_points(vp3plus):
    report = lemma_resonance2_check(vp3plus, samples=12, seed=1)
    assert report.checked == 12
    assert report.holds


def test_lemma_skips_the_origin(vp3plus):
    report = lemma_resonance2_check(vp3plus, points=[[0, 0, 0], [1, -1, 1], [Fraction(1, 2), 0, 3]])
    assert report.checked == 2
    assert report.holds


def test_lemma_needs_top_degree_two():
    with pytest.raises(TopDegreeError):
        lemma_resonance2_check(exterior_algebra(3), samples=1)
