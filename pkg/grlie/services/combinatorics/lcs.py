"""
LCS ranks from a Poincaré polynomial.

Given f(t) = 1 + b_1 t + ... + b_n t^n with Hilb(U(gr G), -t) f(t) = 1, the
ranks phi_k are determined by prod_k (1 - t^k)^(phi_k) = f(-t). Three
independent extractions are provided and serve as each other's oracle:
the Möbius/multinomial closed formula, iterative PBW coefficient
matching, and power sums of inverse roots obtained from Newton's identities.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Sequence, Tuple

from sympy import divisors
from sympy.utilities.iterables import partitions

from grlie.services.combinatorics.exceptions import InvalidArgumentError, NotPBWSeriesError
from grlie.services.combinatorics.numbers import mobius
from grlie.services.numeric.series import UniRationalFunction, series_expand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankTable:
    """phi_1..phi_K of a group or family."""

    label: str
    ranks: Tuple[int, ...]

    def __post_init__(self):
        if any(r < 0 for r in self.ranks):
            raise ValueError("LCS ranks are non-negative")

    def pairs(self) -> List[Tuple[int, int]]:
        return [(k, r) for k, r in enumerate(self.ranks, start=1)]

    def __getitem__(self, k: int) -> int:
        """phi_k, 1-based."""
        return self.ranks[k - 1]


def _check_inputs(b: Sequence[int], K: int) -> None:
    if K < 1:
        raise InvalidArgumentError("K must be >= 1")
    if not b:
        raise InvalidArgumentError("coefficient list must be nonempty")


def _koszul_dual(b: Sequence[int], constant: int = 1) -> UniRationalFunction:
    """1 / f(-t)."""
    if constant == 0:
        raise InvalidArgumentError("f(-t) has zero constant term")
    if constant != 1:
        raise InvalidArgumentError("f(t) must have constant term 1")
    signed = [1] + [(-1) ** i * c for i, c in enumerate(b, start=1)]
    return UniRationalFunction((1,), tuple(signed))


def enveloping_series(b: Sequence[int], D: int) -> List[int]:
    """Coefficients through t^D of Hilb(U, t) = 1 / f(-t)."""
    return [int(c) for c in series_expand(_koszul_dual(b), D)]


def pbw_series(ranks: Sequence[int], D: int) -> List[int]:
    """Coefficients through t^D of prod_k (1 - t^k)^(-phi_k)."""
    series = [0] * (D + 1)
    series[0] = 1
    for k, phi in enumerate(ranks, start=1):
        if k > D or phi == 0:
            continue
        factor = [0] * (D + 1)
        for i in range(D // k + 1):
            factor[k * i] = comb(phi + i - 1, i)
        series = [sum(series[j] * factor[d - j] for j in range(d + 1)) for d in range(D + 1)]
    return series


def _log_coefficient(b: Sequence[int], d: int) -> Fraction:
    """sum over m_1 + 2 m_2 + ... = d of (-1)^s d m! prod b_j^m_j / m_j!."""
    total = Fraction(0)
    for parts in partitions(d, k=len(b)):
        parts = dict(parts)
        m = sum(parts.values()) - 1
        sign = -1 if sum(mult for part, mult in parts.items() if part % 2 == 0) % 2 else 1
        term = Fraction(d * factorial(m))
        for part, mult in parts.items():
            term *= Fraction(b[part - 1] ** mult, factorial(mult))
        total += sign * term
    return total


def lcs_ranks_mobius(b: Sequence[int], K: int, label: str = "") -> RankTable:
    """
    LCS ranks by the Möbius/multinomial formula.

    Args:
        b: coefficients b_1..b_n of f(t)
        K: number of ranks

    Returns:
        RankTable with phi_1..phi_K
    """
    _check_inputs(b, K)
    logs = {d: _log_coefficient(b, d) for d in range(1, K + 1)}
    ranks = []
    for k in range(1, K + 1):
        value = sum(mobius(k // d) * logs[d] for d in divisors(k)) / k
        if value.denominator != 1:
            raise NotPBWSeriesError(f"non-integral rank at degree {k}")
        ranks.append(int(value))
    return RankTable(label, tuple(ranks))


def lcs_ranks_pbw(b: Sequence[int], K: int, label: str = "") -> RankTable:
    """
    LCS ranks by stripping PBW factors from 1/f(-t) degree by degree.

    Raises:
        NotPBWSeriesError: if a negative rank is extracted
    """
    _check_inputs(b, K)
    series = [int(c) for c in series_expand(_koszul_dual(b), K)]
    ranks = []
    for k in range(1, K + 1):
        phi = series[k]
        if phi < 0:
            raise NotPBWSeriesError(f"series is not a PBW series: phi_{k} = {phi}")
        ranks.append(phi)
        # multiply by (1 - t^k)^phi
        factor = [0] * (K + 1)
        for i in range(K // k + 1):
            factor[k * i] = (-1) ** i * comb(phi, i)
        series = [sum(series[j] * factor[d - j] for j in range(d + 1)) for d in range(K + 1)]
    return RankTable(label, tuple(ranks))


def power_sums(b: Sequence[int], K: int, constant: int = 1) -> List[Fraction]:
    """
    p_d = sum of d-th powers of the inverse roots of g(t) = f(-t), d = 1..K.

    Newton's identities on g(t) = 1 + c_1 t + ...: p_d = -d c_d - sum_{i<d} c_i p_{d-i}.
    """
    if constant == 0:
        raise InvalidArgumentError("f(-t) has zero constant term")
    c = [Fraction((-1) ** i * value, constant) for i, value in enumerate(b, start=1)]

    def coeff(i: int) -> Fraction:
        return c[i - 1] if i <= len(c) else Fraction(0)

    p: List[Fraction] = []
    for d in range(1, K + 1):
        value = -d * coeff(d)
        for i in range(1, d):
            value -= coeff(i) * p[d - i - 1]
        p.append(value)
    return p


def lcs_ranks_powersum(b: Sequence[int], K: int, label: str = "", constant: int = 1) -> RankTable:
    """
    LCS ranks phi_k = (1/k) sum_{d|k} mu(k/d) p_d from exact power sums.

    Raises:
        InvalidArgumentError: if f(-t) has zero constant term
    """
    _check_inputs(b, K)
    p = power_sums(b, K, constant)
    ranks = []
    for k in range(1, K + 1):
        value = sum(mobius(k // d) * p[d - 1] for d in divisors(k)) / k
        if value.denominator != 1 or value < 0:
            raise NotPBWSeriesError(f"invalid rank {value} at degree {k}")
        ranks.append(int(value))
    return RankTable(label, tuple(ranks))
