"""
Univariate rational functions and truncated bivariate series.

All Hilbert and Poincaré series in the engine are carried as
UniRationalFunction values and compared through their exact Taylor
coefficients. BiSeries holds truncated exponential generating functions in
(u, t). Both live in sympy rings over QQ; expansion and truncated products
go through ``sympy.polys.ring_series``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple, Union

from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement

from grlie.services.numeric.exceptions import ExpUndefinedError, NotExpandableError
from grlie.services.numeric.polynomials import from_scalar, poly_from_terms, poly_ring, to_scalar

Number = Union[int, Fraction]
Coefficients = Tuple[Fraction, ...]

T_RING = poly_ring(("t",))
UT_RING = poly_ring(("u", "t"))


def _univariate(value: Union[PolyElement, Sequence[Number]]) -> PolyElement:
    """A polynomial in t from ascending coefficients (or an element of the t ring)."""
    if isinstance(value, PolyElement):
        return T_RING(value)
    return poly_from_terms(T_RING, {(i,): c for i, c in enumerate(value)})


def coefficients_of(p: PolyElement) -> Coefficients:
    """Ascending coefficients of a polynomial in t, without trailing zeros."""
    if not p:
        return ()
    top = max(exp[0] for exp in p.keys())
    return tuple(to_scalar(p.get((i,), 0)) for i in range(top + 1))


@dataclass(frozen=True)
class UniRationalFunction:
    """
    numerator(t) / denominator(t) with rational coefficients.

    Either side may be given as ascending coefficients or as an element of
    ``T_RING``. The denominator must be nonzero; expansion at t=0
    additionally needs a nonzero constant term.
    """

    numerator: PolyElement
    denominator: PolyElement = field(default_factory=lambda: T_RING.one)

    def __post_init__(self):
        object.__setattr__(self, "numerator", _univariate(self.numerator))
        object.__setattr__(self, "denominator", _univariate(self.denominator))
        if not self.denominator:
            raise NotExpandableError("denominator is the zero polynomial")

    @classmethod
    def polynomial(cls, coeffs: Sequence[Number]) -> "UniRationalFunction":
        return cls(tuple(coeffs))

    @classmethod
    def over_one_minus_t(cls, numerator: Sequence[Number], power: int) -> "UniRationalFunction":
        """numerator / (1 - t)^power."""
        (t,) = T_RING.gens
        return cls(tuple(numerator), (1 - t) ** power)

    def __add__(self, other: "UniRationalFunction") -> "UniRationalFunction":
        if self.denominator == other.denominator:
            return UniRationalFunction(self.numerator + other.numerator, self.denominator)
        return UniRationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "UniRationalFunction":
        return UniRationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: "UniRationalFunction") -> "UniRationalFunction":
        return self + (-other)

    def __mul__(self, other: Union["UniRationalFunction", Number]) -> "UniRationalFunction":
        if isinstance(other, UniRationalFunction):
            return UniRationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)
        return UniRationalFunction(self.numerator * from_scalar(other), self.denominator)

    __rmul__ = __mul__

    def expand(self, degree: int) -> List[Fraction]:
        return series_expand(self, degree)

    def __str__(self) -> str:
        numerator = format_polynomial(coefficients_of(self.numerator))
        denominator = format_polynomial(coefficients_of(self.denominator))
        return f"({numerator})/({denominator})"


def series_expand(f: UniRationalFunction, degree: int) -> List[Fraction]:
    """
    Taylor coefficients c_0..c_degree of ``f`` at t=0.

    Args:
        f: the rational function
        degree: last coefficient index (inclusive)

    Returns:
        Exact coefficients as Fractions

    Raises:
        NotExpandableError: if the denominator has zero constant term
    """
    if not f.denominator.get((0,)):
        raise NotExpandableError("denominator has zero constant term; not expandable at t=0")
    (t,) = T_RING.gens
    prec = degree + 1
    series = rs_mul(f.numerator, rs_series_inversion(f.denominator, t, prec), t, prec)
    return [to_scalar(series.get((k,), 0)) for k in range(prec)]


def format_polynomial(coeffs: Sequence[Number], var: str = "t") -> str:
    """Render coefficients as '1 + 6t + 6t^2'."""
    terms = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = f"{mag}"
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class BiSeries:
    """
    Truncated series in (u, t): terms u^i t^j with i <= u_order and j <= t_order.
    """

    u_order: int
    t_order: int
    series: PolyElement = field(default_factory=lambda: UT_RING.zero)

    def __post_init__(self):
        if self.u_order < 0 or self.t_order < 0:
            raise ValueError("truncation orders must be non-negative")
        u, t = UT_RING.gens
        series = rs_trunc(UT_RING(self.series), u, self.u_order + 1)
        object.__setattr__(self, "series", rs_trunc(series, t, self.t_order + 1))

    @classmethod
    def zero(cls, u_order: int, t_order: int) -> "BiSeries":
        return cls(u_order, t_order)

    @classmethod
    def from_terms(cls, u_order: int, t_order: int, terms: Dict[Tuple[int, int], Number]) -> "BiSeries":
        """Build from {(i, j): c}; terms beyond the truncation are dropped."""
        return cls(u_order, t_order, poly_from_terms(UT_RING, terms))

    def coefficient(self, i: int, j: int) -> Fraction:
        return to_scalar(self.series.get((i, j), 0))

    def u_coefficient(self, i: int) -> Coefficients:
        """Coefficient of u^i as a polynomial in t, padded to t_order."""
        return tuple(self.coefficient(i, j) for j in range(self.t_order + 1))

    def _check(self, other: "BiSeries") -> None:
        if (self.u_order, self.t_order) != (other.u_order, other.t_order):
            raise ValueError("truncation orders differ")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(self.u_order, self.t_order, self.series + other.series)

    def scale(self, factor: Number) -> "BiSeries":
        return BiSeries(self.u_order, self.t_order, self.series * from_scalar(factor))

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        u, _ = UT_RING.gens
        return BiSeries(self.u_order, self.t_order, rs_mul(self.series, other.series, u, self.u_order + 1))

    def is_zero(self) -> bool:
        return not self.series


def truncated_exp(g: BiSeries) -> BiSeries:
    """
    exp(g) = sum g^k / k! truncated to the orders of ``g``.

    Raises:
        ExpUndefinedError: if g has a nonzero constant term
    """
    if g.coefficient(0, 0) != 0:
        raise ExpUndefinedError("exp undefined in truncation: constant term is nonzero")
    result = BiSeries.from_terms(g.u_order, g.t_order, {(0, 0): 1})
    power = result
    # every term of g^k has total (u, t)-degree >= k
    for k in range(1, g.u_order + g.t_order + 1):
        power = power * g
        if power.is_zero():
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result
