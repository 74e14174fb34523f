"""
Multivariate polynomials over the rationals and Laurent polynomials.

MultiPoly values are sympy ``PolyElement`` objects over ``QQ`` in grevlex
order: a sparse map from exponent tuples to nonzero coefficients. The
helpers here add the graded operations the engine needs (homogeneous
components, initial forms, evaluation at rational points).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

Scalar = Fraction
MultiPoly = PolyElement
Exponent = Tuple[int, ...]
Number = Union[int, Fraction]


def default_names(n: int, prefix: str = "x") -> Tuple[str, ...]:
    """Variable names x1..xn."""
    return tuple(f"{prefix}{i + 1}" for i in range(n))


@lru_cache(maxsize=None)
def _ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ, grevlex)


def poly_ring(n_or_names: Union[int, Sequence[str]]) -> PolyRing:
    """
    Polynomial ring over QQ with grevlex order.

    Args:
        n_or_names: variable count (names x1..xn) or explicit variable names

    Returns:
        A cached sympy PolyRing
    """
    if isinstance(n_or_names, int):
        if n_or_names < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        names = default_names(n_or_names)
    else:
        names = tuple(n_or_names)
    return _ring(names)


def to_scalar(value) -> Fraction:
    """Convert an int, Fraction or QQ element to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def from_scalar(value: Number):
    """Convert an int or Fraction to a QQ element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def poly_from_terms(ring: PolyRing, terms: Mapping[Exponent, Number]) -> MultiPoly:
    """Build a polynomial from an exponent -> coefficient map, dropping zeros."""
    return ring.from_dict({exp: from_scalar(c) for exp, c in terms.items() if c})


def poly_terms(f: MultiPoly) -> Dict[Exponent, Fraction]:
    """Exponent -> Fraction map of a polynomial."""
    return {exp: to_scalar(c) for exp, c in f.items()}


def total_degree(f: MultiPoly) -> int:
    """Largest total degree of a term; -1 for the zero polynomial."""
    return max((sum(exp) for exp in f.keys()), default=-1)


def order_of(f: MultiPoly) -> Optional[int]:
    """Smallest total degree of a term; None for the zero polynomial."""
    return min((sum(exp) for exp in f.keys()), default=None)


def homogeneous_component(f: MultiPoly, degree: int) -> MultiPoly:
    """The degree-``degree`` homogeneous part of ``f``."""
    return f.ring.from_dict({exp: c for exp, c in f.items() if sum(exp) == degree})


def linear_part(f: MultiPoly) -> MultiPoly:
    """The degree-1 homogeneous part of ``f``."""
    return homogeneous_component(f, 1)


def initial_form(f: MultiPoly) -> MultiPoly:
    """The lowest-degree homogeneous part of ``f`` (zero stays zero)."""
    low = order_of(f)
    if low is None:
        return f
    return homogeneous_component(f, low)


def is_homogeneous(f: MultiPoly) -> bool:
    return len({sum(exp) for exp in f.keys()}) <= 1


def evaluate(f: MultiPoly, point: Sequence[Number]) -> Fraction:
    """Evaluate ``f`` at a rational point."""
    if len(point) != f.ring.ngens:
        raise ValueError("point dimension does not match the ring")
    values = [Fraction(v) for v in point]
    total = Fraction(0)
    for exp, c in f.items():
        term = to_scalar(c)
        for v, e in zip(values, exp):
            if e:
                term *= v ** e
        total += term
    return total


def monomials_of_degree(n: int, degree: int) -> List[Exponent]:
    """All exponent vectors of total degree ``degree`` in ``n`` variables, lex descending."""
    if degree < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(n), degree):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        result.append(tuple(exp))
    return result


def monomial_count(n: int, degree: int) -> int:
    """dim S_degree for S a polynomial ring in n variables."""
    if degree < 0:
        return 0
    return comb(degree + n - 1, n - 1)


class LaurentPoly:
    """
    Laurent polynomial in t_1..t_n with rational coefficients.

    Stored as a map from integer exponent vectors (entries may be negative)
    to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, Number]] = None):
        self.nvars = nvars
        self.terms: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError("exponent vector has the wrong length")
            if c:
                self.terms[tuple(exp)] = Fraction(c)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: Number = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.monomial(nvars, (0,) * nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return LaurentPoly(self.nvars, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", Number]) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.nvars, {exp: c * other for exp, c in self.terms.items()})
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def min_exponents(self) -> Exponent:
        """Componentwise minimum exponent over all terms (zeros for the zero polynomial)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(exp[i] for exp in self.terms) for i in range(self.nvars))

    def shifted(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exps."""
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(exp, exps)): c for exp, c in self.terms.items()},
        )

    def evaluate(self, point: Sequence[Number]) -> Fraction:
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(values, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def to_multipoly(self, ring: PolyRing) -> MultiPoly:
        """
        Substitute t_i = 1 + x_i.

        Raises:
            ValueError: if some exponent is negative (clear denominators first)
        """
        if ring.ngens != self.nvars:
            raise ValueError("ring variable count does not match")
        result = ring.zero
        for exp, c in self.terms.items():
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent; clear Laurent denominators first")
            term = ring.ground_new(from_scalar(c))
            for x, e in zip(ring.gens, exp):
                if e:
                    term *= (ring.one + x) ** e
            result += term
        return result

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items()):
            mono = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)
