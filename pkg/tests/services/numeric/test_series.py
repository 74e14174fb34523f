"""Tests for rational functions and truncated bivariate series."""

from fractions import Fraction

import pytest

from grlie.services.numeric.exceptions import ExpUndefinedError, NotExpandableError
from grlie.services.numeric.sampling import make_rng
from grlie.services.numeric.series import (
    T_RING,
    BiSeries,
    UniRationalFunction,
    coefficients_of,
    format_polynomial,
    series_expand,
    truncated_exp,
)


def test_geometric_series():
    """1/(1-t)^2 expands to 1, 2, 3, ..."""
    f = UniRationalFunction.over_one_minus_t([1], 2)
    assert f.expand(4) == [1, 2, 3, 4, 5]


def test_arithmetic_of_rational_functions():
    """Sums and products agree with coefficientwise expectations."""
    geometric = UniRationalFunction.over_one_minus_t([1], 1)
    square = geometric * geometric
    assert square.expand(3) == [1, 2, 3, 4]
    assert (square - geometric).expand(3) == [0, 1, 2, 3]
    assert (2 * geometric).expand(2) == [2, 2, 2]
    assert (geometric + UniRationalFunction.polynomial([0, 1])).expand(2) == [1, 2, 1]


def _random_rational_function(rng):
    numerator = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
    denominator = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))]
    return UniRationalFunction(tuple(numerator), tuple(denominator))


@pytest.mark.parametrize("trial", range(20))
def test_expansion_of_a_product_is_the_convolution(trial):
    """series(f g) is the Cauchy product of series(f) and series(g)."""
    rng = make_rng(trial, "convolution")
    f, g = _random_rational_function(rng), _random_rational_function(rng)
    degree = 8
    a, b = series_expand(f, degree), series_expand(g, degree)
    convolution = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(degree + 1)]
    assert series_expand(f * g, degree) == convolution


def test_expansion_inverts_the_denominator():
    """1 / (2 - 3t + t^2) = sum (1 - 2^-(k + 1)) t^k."""
    f = UniRationalFunction((1,), (2, -3, 1))
    assert f.expand(3) == [Fraction(1, 2), Fraction(3, 4), Fraction(7, 8), Fraction(15, 16)]


def test_coefficients_of():
    """Ascending coefficients without trailing zeros."""
    (t,) = T_RING.gens
    assert coefficients_of(1 - 2 * t ** 2) == (1, 0, -2)
    assert coefficients_of(T_RING.zero) == ()
    assert UniRationalFunction.over_one_minus_t([1], 2).denominator == (1 - t) ** 2
    assert str(UniRationalFunction((1, 1), (1, -1))) == "(1 + t)/(1 - t)"


def test_polynomial_expansion_pads_with_zeros():
    """A polynomial's Taylor series ends with zeros."""
    assert series_expand(UniRationalFunction.polynomial([1, 6, 6]), 4) == [1, 6, 6, 0, 0]


def test_not_expandable():
    """Zero denominators and poles at t=0 are rejected."""
    with pytest.raises(NotExpandableError):
        UniRationalFunction((1,), (0,))
    with pytest.raises(NotExpandableError):
        UniRationalFunction((1,), (0, 1)).expand(2)


def test_format_polynomial():
    """Polynomials render with unit coefficients suppressed."""
    assert format_polynomial([1, 6, 6]) == "1 + 6t + 6t^2"
    assert format_polynomial([0, -1, 0, 2]) == "-t + 2t^3"
    assert format_polynomial([1, 3], var="u") == "1 + 3u"
    assert format_polynomial([]) == "0"


def test_bi_series_product():
    """(1 + u)(1 + t) truncated keeps the mixed term."""
    a = BiSeries.from_terms(2, 2, {(0, 0): 1, (1, 0): 1})
    b = BiSeries.from_terms(2, 2, {(0, 0): 1, (0, 1): 1})
    product = a * b
    assert product.coefficient(1, 1) == 1
    assert product.u_coefficient(0) == (1, 1, 0)
    assert not product.is_zero()


def test_bi_series_rejects_mismatched_orders():
    """Orders are non-negative and must match for arithmetic."""
    with pytest.raises(ValueError):
        BiSeries.zero(-1, 1)
    with pytest.raises(ValueError):
        BiSeries.zero(1, 1) + BiSeries.zero(2, 1)


def test_truncated_exp():
    """exp(u) = sum u^k / k!."""
    g = BiSeries.from_terms(3, 0, {(1, 0): 1})
    result = truncated_exp(g)
    assert [result.coefficient(i, 0) for i in range(4)] == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_truncated_exp_needs_zero_constant_term():
    """A constant term makes exp undefined in the truncation."""
    with pytest.raises(ExpUndefinedError):
        truncated_exp(BiSeries.from_terms(1, 1, {(0, 0): 1}))
