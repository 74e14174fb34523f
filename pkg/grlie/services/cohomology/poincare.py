"""
Closed-form Poincaré polynomials and their exponential generating functions.

Poin(P_n, t) has coefficients c(n, n-i), Poin(vP_n, t) has L(n, n-i) and
Poin(vP_n^+, t) has S(n, n-i). Summed against u^n/n! they give

    P:       exp(-log(1 - tu) / t)
    vP:      exp(u / (1 - tu))
    vP_plus: exp((exp(tu) - 1) / t)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, List, Tuple

from grlie.services.cohomology.exceptions import CohomologyError, UnknownAlgebraError
from grlie.services.combinatorics.numbers import special_number
from grlie.services.numeric.series import BiSeries, truncated_exp

logger = logging.getLogger(__name__)

POINCARE_KINDS = {"P": "stirling1", "vP": "lah", "vP_plus": "stirling2"}

MAX_EGF_ORDER = 8


def _kind(family: str) -> str:
    kind = POINCARE_KINDS.get(family)
    if kind is None:
        raise UnknownAlgebraError(f"unknown Poincaré family {family!r}; expected one of {sorted(POINCARE_KINDS)}")
    return kind


def poincare_closed(family: str, n: int) -> List[int]:
    """
    Coefficients of Poin(family_n, t), constant term first.

    Args:
        family: "P", "vP" or "vP_plus"
        n: number of strands, n >= 1
    """
    kind = _kind(family)
    if n < 1:
        raise CohomologyError("Poincaré polynomials need n >= 1")
    return [special_number(kind, n, n - i) for i in range(n)]


def euler_characteristic(family: str, n: int) -> int:
    """Poin(t) at t = -1."""
    return sum((-1) ** i * c for i, c in enumerate(poincare_closed(family, n)))


def _log_series(family: str) -> Callable[[int], Fraction]:
    # coefficient of u^m t^(m-1) in the exponent
    if family == "P":
        return lambda m: Fraction(1, m)
    if family == "vP":
        return lambda m: Fraction(1)
    return lambda m: Fraction(1, factorial(m))


@dataclass
class IdentityCheck:
    """Outcome of comparing an EGF expansion with the closed forms."""

    family: str
    order: int
    mismatches: List[Tuple[int, List[Fraction], List[int]]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.mismatches


def egf_expansion(family: str, order: int) -> BiSeries:
    """exp of the family's exponent, truncated at u^order and t^order."""
    _kind(family)
    coeff = _log_series(family)
    exponent = BiSeries.from_terms(order, order, {(m, m - 1): coeff(m) for m in range(1, order + 1)})
    return truncated_exp(exponent)


def egf_identity_check(family: str, order: int) -> IdentityCheck:
    """
    Compare n! [u^n] of the generating function with Poin(family_n, t) for n <= order.

    Raises:
        CohomologyError: if order is outside 1..8
    """
    if not 1 <= order <= MAX_EGF_ORDER:
        raise CohomologyError(f"EGF order must be in 1..{MAX_EGF_ORDER}")
    series = egf_expansion(family, order)
    report = IdentityCheck(family, order)
    for n in range(1, order + 1):
        expanded = [c * factorial(n) for c in series.u_coefficient(n)]
        closed = poincare_closed(family, n)
        padded = closed + [0] * (len(expanded) - len(closed))
        if expanded != padded:
            report.mismatches.append((n, expanded, closed))
    logger.info("checked generating function", extra={"family": family, "order": order, "holds": report.holds})
    return report
