"""Tests for Chen-rank series, closed forms and the Chen ranks formula."""

import pytest

from grlie.services.alexander.exceptions import AlexanderError
from grlie.services.alexander.theta import (
    ThetaSeries,
    chen_formula_difference,
    chen_formula_test,
    chen_series,
    formula_value,
    free_chen_series,
    free_product_abelian_series,
    holonomy_chen_series,
    known_chen_series,
    theta_closed,
    theta_comparison,
)
from grlie.services.alexander.hilbert import gr_hilbert, graded_hilbert
from grlie.services.alexander.module import alexander_presentation, linearized_presentation
from grlie.services.cohomology.algebra import beer_vP_plus
from grlie.services.groups.families import abelian, direct_product, free, named_group, pbar4, vP_plus
from grlie.services.lie.presentation import holonomy_presentation, initial_form_presentation
from grlie.services.lie.quotient import chen_dims
from grlie.services.numeric.series import series_expand


def test_theta_closed_forms():
    """Free, pure braid and Z * Z^(n-1) closed forms."""
    assert [theta_closed("free", 3, k) for k in range(1, 5)] == [3, 3, 8, 15]
    assert [theta_closed("purebraid", 4, k) for k in range(1, 5)] == [6, 4, 10, 15]
    assert [theta_closed("free_product_abelian", 3, k) for k in range(2, 6)] == [2, 5, 9, 14]
    with pytest.raises(AlexanderError):
        theta_closed("free", 3, 0)
    with pytest.raises(AlexanderError):
        theta_closed("surface", 3, 2)


def test_generating_functions_match_closed_forms():
    """The rational series expand to the closed forms."""
    for n in (2, 3, 4):
        expanded = [int(c) for c in series_expand(free_chen_series(n), 5)]
        assert expanded == [theta_closed("free", n, k) for k in range(2, 8)]
    assert [int(c) for c in series_expand(free_product_abelian_series(3), 3)] == [2, 5, 9, 14]


def test_known_series():
    """Recorded series start with the published ranks."""
    assert [int(c) for c in series_expand(known_chen_series("vP3"), 2)] == [9, 34, 84]
    assert [int(c) for c in series_expand(known_chen_series("vP4plus"), 3)] == [8, 29, 69, 134]
    assert [int(c) for c in series_expand(known_chen_series("vP5plus"), 2)] == [20, 95, 265]
    assert int(series_expand(known_chen_series("vP6plus"), 0)[0]) == 40
    with pytest.raises(AlexanderError):
        known_chen_series("P5")


def test_theta_series_access():
    """theta_k is indexed from k = 2."""
    theta = ThetaSeries("F2", (1, 2, 3))
    assert theta.max_degree == 4
    assert theta.theta(3) == 2
    assert theta.pairs() == [(2, 1), (3, 2), (4, 3)]
    assert theta.to_csv() == "k,theta\n2,1\n3,2\n4,3\n"
    assert theta.to_dict() == {"label": "F2", "start": 2, "coefficients": [1, 2, 3]}
    with pytest.raises(AlexanderError):
        theta.theta(5)
    with pytest.raises(ValueError):
        ThetaSeries("x", (1, -1))


@pytest.mark.parametrize("n,D", [(2, 4), (3, 2)])
def test_chen_series_of_free_groups(elimination, n, D):
    """B(F_n) = wedge^2 S^n / delta_3 recovers the free Chen ranks."""
    theta = chen_series(free(n), D, **elimination)
    assert list(theta.coefficients) == [theta_closed("free", n, k) for k in range(2, D + 3)]
    assert theta.label == f"F{n}"


def test_chen_series_of_abelian_group(elimination):
    """Z^2 has a trivial Alexander invariant."""
    assert chen_series(abelian(2), 3, **elimination).coefficients == (0, 0, 0, 0)


def test_chen_series_of_free_product_with_abelian(elimination):
    """Z * Z^2 matches its closed form."""
    theta = chen_series(named_group("ZZ2"), 3, **elimination)
    assert theta.coefficients == (2, 5, 9, 14)


def test_chen_series_of_pbar4(elimination):
    """theta_2 = 4 and theta_k = 5(k - 1) for k >= 3."""
    assert chen_series(pbar4(), 2, **elimination).coefficients == (4, 10, 15)


def test_chen_series_of_direct_product_is_additive(elimination):
    """theta(Z2 x F2) = theta(Z2) + theta(F2)."""
    product = chen_series(direct_product(abelian(2), free(2)), 3, **elimination)
    parts = chen_series(abelian(2), 3, **elimination) + chen_series(free(2), 3, **elimination)
    assert product.coefficients == parts.coefficients == (1, 2, 3, 4)


def test_holonomy_chen_series_of_vp4plus(elimination):
    """The linearized module gives 8, 29, 69."""
    theta = holonomy_chen_series(vP_plus(4), 2, **elimination)
    assert theta.coefficients == (8, 29, 69)
    assert theta.label == "h(vP4plus)"


def test_chen_series_of_vp3_model(elimination):
    """P̄4 * Z has the Chen ranks of vP3."""
    theta = chen_series(named_group("vP3model"), 2, **elimination)
    assert theta.coefficients == (9, 34, 84)


def test_chen_formula_holds_for_pbar4():
    """theta_k(P̄4) = 5 theta_k(F2) for k >= 3."""
    theta = ThetaSeries("Pbar4", (4, 10, 15, 20))
    verdict = chen_formula_test(theta, {2: 5}, 3, 5)
    assert verdict.holds
    assert verdict.describe() == "holds for 3 <= k <= 5"
    assert formula_value({2: 5}, 4) == 15


def test_chen_formula_fails_for_free_product():
    """Z * Z^2 is not covered by its single component."""
    theta = ThetaSeries("ZZ2", (2, 5, 9, 14))
    verdict = chen_formula_test(theta, {3: 1}, 3, 5)
    assert verdict.first_failure == 3
    assert verdict.describe() == "fails at k=3: theta=5, formula=8"
    difference = chen_formula_difference(theta, {3: 1}, 5)
    expected = series_expand(free_product_abelian_series(3) - free_chen_series(3), 3)
    assert difference == [-1, -3, -6, -10] == [int(c) for c in expected]


def test_chen_formula_degree_checks():
    """k_min starts at 3 and D stays within the series."""
    theta = ThetaSeries("x", (1, 2))
    with pytest.raises(AlexanderError):
        chen_formula_test(theta, {2: 1}, 2, 3)
    with pytest.raises(AlexanderError):
        chen_formula_test(theta, {2: 1}, 3, 4)
    with pytest.raises(AlexanderError):
        chen_formula_difference(theta, {2: 1}, 4)


def test_theta_comparison_for_free_group(elimination):
    """For F2 the group, its holonomy and the Lie computation agree."""
    comparison = theta_comparison(free(2), 2, lie_degree=4, **elimination)
    assert comparison.group == comparison.holonomy == comparison.lie == (1, 2, 3)
    assert comparison.bounded
    assert comparison.equal_degrees() == [2, 3, 4]


@pytest.mark.parametrize("group,D", [("F3", 2), ("Z3", 2), ("vP3plus", 3), ("Pbar4", 2), ("vP4plus", 2)])
def test_linearized_module_matches_lie_chen_ranks(elimination, group, D):
    """graded_hilbert of the linearized module gives the Chen ranks of the holonomy Lie algebra."""
    G = named_group(group)
    linear = graded_hilbert(linearized_presentation(alexander_presentation(G)), D, **elimination)
    lie = chen_dims(initial_form_presentation(G), D + 2, **elimination).dims[1:]
    assert tuple(linear) == lie


def test_holonomy_from_cohomology_has_the_same_chen_ranks(elimination):
    """h(vP4plus) built from its cohomology algebra has theta = 8, 29, 69."""
    lie = chen_dims(holonomy_presentation(beer_vP_plus(4)), 4, **elimination).dims
    assert lie == (6, 8, 29, 69)
    assert lie[1:] == holonomy_chen_series(vP_plus(4), 2, **elimination).coefficients


@pytest.mark.parametrize("group,D", [("F3", 3), ("Z3", 2), ("vP3plus", 3), ("vP3", 2), ("Pbar4", 2)])
def test_linearization_is_exact_for_one_formal_groups(elimination, group, D):
    """gr B(G) and the linearized module have the same Hilbert function."""
    M = alexander_presentation(named_group(group))
    assert gr_hilbert(M, D, **elimination) == graded_hilbert(linearized_presentation(M), D, **elimination)


def test_linearized_module_bounds_the_associated_graded(elimination):
    """graded_hilbert(linearized) >= gr_hilbert coefficientwise."""
    M = alexander_presentation(vP_plus(4))
    group = gr_hilbert(M, 2, **elimination)
    linear = graded_hilbert(linearized_presentation(M), 2, **elimination)
    assert all(a <= b for a, b in zip(group, linear))
    assert linear == [8, 29, 69]


@pytest.mark.slow
def test_holonomy_chen_series_of_vp5plus(elimination):
    """The linearized module of vP5plus gives 20, 95, 265."""
    assert holonomy_chen_series(vP_plus(5), 2, **elimination).coefficients == (20, 95, 265)
