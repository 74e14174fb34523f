"""Tests for Lie presentations, graded dimensions, Chen ranks and mildness."""

from fractions import Fraction

import pytest

from grlie.services.cohomology.algebra import algebra_family, arnold, beer_vP_plus, exterior_algebra, free_algebra
from grlie.services.cohomology.poincare import poincare_closed
from grlie.services.combinatorics.lcs import lcs_ranks_pbw
from grlie.services.groups.families import free, named_group, vP_plus
from grlie.services.groups.presentation import GroupPresentation, Word
from grlie.services.lie.exceptions import NonHomogeneousRelatorError, WeightOneRelatorError
from grlie.services.lie.mildness import anick_series, mildness_check
from grlie.services.lie.presentation import (
    LiePresentation,
    LieRelator,
    free_lie_presentation,
    holonomy_presentation,
    initial_form_presentation,
    quadratic_relators,
)
from grlie.services.lie.quotient import GradedDims, LieQuotient, chen_dims, graded_dims


def test_lie_relator_validation():
    """Relators are nonzero, homogeneous, Lyndon-keyed and of degree >= 2."""
    assert LieRelator({(0, 1): 1}).degree == 2
    with pytest.raises(NonHomogeneousRelatorError):
        LieRelator({})
    with pytest.raises(NonHomogeneousRelatorError):
        LieRelator({(0, 1): 1, (0, 0, 1): 1})
    with pytest.raises(NonHomogeneousRelatorError):
        LieRelator({(1, 0): 1})
    with pytest.raises(WeightOneRelatorError):
        LieRelator({(0,): 1})


def test_integral_expansion():
    """Rational relators are scaled to integers."""
    relator = LieRelator({(0, 1): Fraction(1, 2), (0, 2): Fraction(1, 3)})
    assert relator.integral_expansion() == {(0, 1): 3, (1, 0): -3, (0, 2): 2, (2, 0): -2}


def test_presentation_rejects_unknown_generators():
    """Relators may only use the presentation's generators."""
    with pytest.raises(NonHomogeneousRelatorError):
        LiePresentation(2, (LieRelator({(0, 2): 1}),))
    assert LiePresentation(2).labels == ("x1", "x2")


def test_quadratic_relators_skip_zero_vectors():
    """Zero vectors give no relator."""
    relators = quadratic_relators(3, [[1, 0, -1], [0, 0, 0]])
    assert len(relators) == 1
    assert relators[0].coefficients == {(0, 1): Fraction(1), (1, 2): Fraction(-1)}


def test_free_lie_dims():
    """No relators gives the Witt numbers."""
    dims = graded_dims(free_lie_presentation(2), 5)
    assert dims.dims == (2, 1, 2, 3, 6)
    assert dims[3] == 2
    assert dims.pairs()[0] == (1, 2)


def test_abelian_holonomy():
    """The holonomy of the exterior algebra is abelian."""
    L = holonomy_presentation(exterior_algebra(3))
    assert L.name == "h(Z3)"
    assert graded_dims(L, 4).as_list() == [3, 0, 0, 0]


def test_holonomy_of_free_algebra_is_free():
    """A free algebra has no cup products and a free holonomy Lie algebra."""
    assert graded_dims(holonomy_presentation(free_algebra(2)), 4).dims == (2, 1, 2, 3)


def test_one_relator_holonomy_matches_lcs_ranks():
    """h(vP3plus) has the LCS ranks of 1 + 3t + t^2."""
    L = holonomy_presentation(beer_vP_plus(3))
    assert graded_dims(L, 5, seed=3).dims == lcs_ranks_pbw([3, 1], 5).ranks


def test_chen_dims_of_free_lie_algebra():
    """theta_k(F2) = k - 1 for k >= 2."""
    assert chen_dims(free_lie_presentation(2), 5).dims == (2, 1, 2, 3, 4)


def test_quotient_complement_words():
    """The complement of J_2 in L(3) / ([x1, x2]) is spanned by the other two brackets."""
    L = LiePresentation(3, (LieRelator({(0, 1): 1}),))
    quotient = LieQuotient(L)
    assert quotient.dim(2) == 2
    assert quotient.complement_words(2) == [(0, 2), (1, 2)]
    assert quotient.derived_rank(3) == 0


def test_graded_dims_validation():
    """Dimensions are non-negative."""
    with pytest.raises(ValueError):
        GradedDims("x", (1, -1))


def test_initial_form_presentation():
    """Initial forms of a commutator presentation give quadratic relators."""
    L = initial_form_presentation(named_group("Z2"))
    assert L.labels == ("a1", "a2")
    assert len(L.relators) == 1
    with pytest.raises(WeightOneRelatorError):
        initial_form_presentation(GroupPresentation(("a",), (Word.generator(0),)))
    x = Word.generator
    deep = Word.commutator(Word.commutator(x(0), x(1)), x(0))
    with pytest.raises(NonHomogeneousRelatorError):
        initial_form_presentation(GroupPresentation(free(2).generators, (deep,)))


def test_anick_series():
    """1 / (1 - 2t + t^2) = sum (k + 1) t^k."""
    assert anick_series(2, 1, 3) == (1, 2, 3, 4)


def test_mild_presentation():
    """F2 x Z is mild."""
    verdict = mildness_check(named_group("P3"), 4)
    assert verdict.mild
    assert verdict.describe() == "mild up to 4"
    assert verdict.ranks[:2] == (3, 1)


def test_vp4plus_is_not_mild():
    """The upper pure virtual braid group on four strands fails in degree 3."""
    verdict = mildness_check(vP_plus(4), 3)
    assert not verdict.mild
    assert verdict.first_failure == 3
    assert verdict.describe().startswith("fails at degree 3")


@pytest.mark.parametrize("family,name,n,K", [
    ("vP", "beer_vP", 2, 5),
    ("vP", "beer_vP", 3, 4),
    ("vP_plus", "beer_vP_plus", 2, 5),
    ("vP_plus", "beer_vP_plus", 3, 6),
    ("vP_plus", "beer_vP_plus", 4, 4),
])
def test_holonomy_dims_match_closed_form_lcs_ranks(family, name, n, K):
    """phi_k of the holonomy Lie algebra is the PBW extraction from Poin(-t)."""
    L = holonomy_presentation(algebra_family(name, n))
    b = poincare_closed(family, n)[1:]
    assert graded_dims(L, K, seed=3).dims == lcs_ranks_pbw(b, K).ranks


@pytest.mark.slow
def test_holonomy_dims_of_vp4_match_closed_form_lcs_ranks():
    L = holonomy_presentation(algebra_family("beer_vP", 4))
    assert graded_dims(L, 3, seed=3).dims == lcs_ranks_pbw(poincare_closed("vP", 4)[1:], 3).ranks


@pytest.mark.parametrize("algebra,K", [
    (free_algebra(3), 5),
    (arnold(3), 5),
    (arnold(4), 4),
    (beer_vP_plus(3), 5),
    (beer_vP_plus(4), 4),
])
def test_chen_ranks_are_bounded_by_lcs_ranks(algebra, K):
    """theta_k <= phi_k, with equality through degree 3."""
    L = holonomy_presentation(algebra)
    phi = graded_dims(L, K, seed=3).dims
    theta = chen_dims(L, K, seed=3).dims
    assert all(t <= p for t, p in zip(theta, phi))
    assert theta[:3] == phi[:3]


def test_chen_ranks_of_free_lie_algebra_drop_from_degree_four():
    """theta_4(F3) = 15 < phi_4(F3) = 18."""
    L = holonomy_presentation(free_algebra(3))
    assert graded_dims(L, 4).dims == (3, 3, 8, 18)
    assert chen_dims(L, 4).dims == (3, 3, 8, 15)
