"""
Chen-rank series, closed forms and the Chen ranks formula.

theta_k(G) for k >= 2 is dim gr_(k-2) of the Alexander invariant, and
theta_k of the holonomy Lie algebra is the degree-(k-2) dimension of the
linearized module.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from grlie.services.alexander.exceptions import AlexanderError
from grlie.services.alexander.hilbert import graded_hilbert, gr_hilbert
from grlie.services.alexander.module import alexander_presentation, linearized_presentation
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.lie.presentation import initial_form_presentation
from grlie.services.lie.quotient import chen_dims
from grlie.services.numeric.series import UniRationalFunction, series_expand

logger = logging.getLogger(__name__)

THETA_KINDS = ("free", "purebraid", "free_product_abelian")


@dataclass(frozen=True)
class ThetaSeries:
    """theta_2, theta_3, ..., theta_D; index 0 holds theta_2."""

    label: str
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if any(c < 0 for c in self.coefficients):
            raise ValueError("Chen ranks are non-negative")

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) + 1

    def theta(self, k: int) -> int:
        if not 2 <= k <= self.max_degree:
            raise AlexanderError(f"theta_{k} is outside 2..{self.max_degree}")
        return self.coefficients[k - 2]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coefficients, start=2)]

    def __add__(self, other: "ThetaSeries") -> "ThetaSeries":
        """Coefficientwise sum, the Chen series of a direct product."""
        size = min(len(self.coefficients), len(other.coefficients))
        coeffs = tuple(a + b for a, b in zip(self.coefficients[:size], other.coefficients[:size]))
        return ThetaSeries(f"({self.label} x {other.label})", coeffs)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["k", "theta"])
        writer.writerows(self.pairs())
        return buffer.getvalue()

    def to_dict(self) -> Dict:
        return {"label": self.label, "start": 2, "coefficients": list(self.coefficients)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dims(cls, label: str, dims: List[int]) -> "ThetaSeries":
        """From module dimensions indexed by degree k - 2."""
        return cls(label, tuple(dims))


def theta_closed(kind: str, n: int, k: int) -> int:
    """
    Closed-form Chen ranks.

    free: theta_1 = n, theta_k = C(n+k-2, k)(k-1).
    purebraid: theta_1 = C(n,2), theta_2 = C(n,3), theta_k = (k-1) C(n+1,4) for k >= 3.
    free_product_abelian (Z * Z^(n-1)): theta_1 = n, then the Taylor
    coefficients of t(1 - (1-t)^(n-1)) / (1-t)^n.

    Raises:
        AlexanderError: for an unknown kind or k < 1
    """
    if k < 1:
        raise AlexanderError("Chen ranks start at k = 1")
    if kind == "free":
        return n if k == 1 else comb(n + k - 2, k) * (k - 1)
    if kind == "purebraid":
        if k == 1:
            return comb(n, 2)
        if k == 2:
            return comb(n, 3)
        return (k - 1) * comb(n + 1, 4)
    if kind == "free_product_abelian":
        if k == 1:
            return n
        return int(series_expand(free_product_abelian_series(n), k - 2)[k - 2])
    raise AlexanderError(f"unknown closed form {kind!r}; expected one of {THETA_KINDS}")


def _one_minus_t_power(power: int) -> Tuple[int, ...]:
    return tuple((-1) ** i * comb(power, i) for i in range(power + 1))


def free_chen_series(n: int) -> UniRationalFunction:
    """sum_{k>=2} theta_k(F_n) t^(k-2) = (1 - (1 - nt)/(1-t)^n) / t^2."""
    numerator = list(_one_minus_t_power(n))
    numerator[0] -= 1
    if n >= 1:
        numerator[1] += n
    return UniRationalFunction(tuple(numerator[2:]), _one_minus_t_power(n))


def free_product_abelian_series(n: int) -> UniRationalFunction:
    """sum_{k>=2} theta_k(Z * Z^(n-1)) t^(k-2) = (1 - (1-t)^(n-1)) / (t (1-t)^n)."""
    numerator = [-c for c in _one_minus_t_power(n - 1)]
    numerator[0] += 1
    return UniRationalFunction(tuple(numerator[1:]), _one_minus_t_power(n))


KNOWN_CHEN_SERIES: Dict[str, UniRationalFunction] = {
    "vP3": UniRationalFunction.over_one_minus_t((9, -20, 15, 0, -4, 1), 6),
    "vP4plus": UniRationalFunction.over_one_minus_t((8, -3, 1), 4),
    "vP5plus": UniRationalFunction.over_one_minus_t((20, 15, 5), 4),
    "vP6plus": UniRationalFunction.over_one_minus_t((40, 35, -40, -20), 5),
}


def known_chen_series(name: str) -> UniRationalFunction:
    """
    Published rational generating functions sum theta_k t^(k-2).

    Raises:
        AlexanderError: if no series is recorded under ``name``
    """
    try:
        return KNOWN_CHEN_SERIES[name]
    except KeyError:
        raise AlexanderError(f"no recorded Chen series for {name!r}") from None


def chen_series(G: GroupPresentation, D: int, budget: Optional[int] = None, **elimination) -> ThetaSeries:
    """theta_2..theta_(D+2) of G from the truncated Alexander invariant."""
    dims = gr_hilbert(alexander_presentation(G), D, budget, **elimination)
    return ThetaSeries.from_dims(G.name, dims)


def holonomy_chen_series(G: GroupPresentation, D: int, budget: Optional[int] = None, **elimination) -> ThetaSeries:
    """theta_2..theta_(D+2) of the holonomy Lie algebra from the linearized module."""
    module = linearized_presentation(alexander_presentation(G))
    dims = graded_hilbert(module, D, budget, **elimination)
    return ThetaSeries.from_dims(f"h({G.name})", dims)


@dataclass(frozen=True)
class ChenFormulaVerdict:
    label: str
    components: Tuple[Tuple[int, int], ...]
    k_min: int
    max_degree: int
    observed: Tuple[int, ...]
    predicted: Tuple[int, ...]
    first_failure: Optional[int]

    @property
    def holds(self) -> bool:
        return self.first_failure is None

    def describe(self) -> str:
        if self.holds:
            return f"holds for {self.k_min} <= k <= {self.max_degree}"
        k = self.first_failure
        pos = k - self.k_min
        return f"fails at k={k}: theta={self.observed[pos]}, formula={self.predicted[pos]}"


def formula_value(components: Mapping[int, int], k: int) -> int:
    """sum_m h_m theta_k(F_m)."""
    return sum(h * theta_closed("free", m, k) for m, h in components.items())


def chen_formula_test(
    theta: ThetaSeries, components: Mapping[int, int], k_min: int, D: int
) -> ChenFormulaVerdict:
    """
    Check theta_k = sum_m h_m theta_k(F_m) for k_min <= k <= D.

    Raises:
        AlexanderError: unless 3 <= k_min <= D <= theta.max_degree
    """
    if not 3 <= k_min <= D:
        raise AlexanderError(f"need 3 <= k_min <= D, got k_min={k_min}, D={D}")
    if D > theta.max_degree:
        raise AlexanderError(f"theta is known through degree {theta.max_degree}, not {D}")
    degrees = range(k_min, D + 1)
    observed = tuple(theta.theta(k) for k in degrees)
    predicted = tuple(formula_value(components, k) for k in degrees)
    failure = next((k for k, a, b in zip(degrees, observed, predicted) if a != b), None)
    verdict = ChenFormulaVerdict(
        theta.label, tuple(sorted(components.items())), k_min, D, observed, predicted, failure
    )
    logger.info("tested Chen ranks formula", extra={"series": theta.label, "verdict": verdict.describe()})
    return verdict


def chen_formula_difference(theta: ThetaSeries, components: Mapping[int, int], D: int) -> List[int]:
    """theta_k - sum_m h_m theta_k(F_m) for k = 2..D, the coefficients of t^(k-2)."""
    if D > theta.max_degree:
        raise AlexanderError(f"theta is known through degree {theta.max_degree}, not {D}")
    return [theta.theta(k) - formula_value(components, k) for k in range(2, D + 1)]


@dataclass(frozen=True)
class ThetaComparison:
    """theta_k(G) against theta_k of its holonomy Lie algebra, k = 2..D+2."""

    label: str
    group: Tuple[int, ...]
    holonomy: Tuple[int, ...]
    lie: Tuple[int, ...] = ()

    @property
    def bounded(self) -> bool:
        return all(a <= b for a, b in zip(self.group, self.holonomy))

    def equal_degrees(self) -> List[int]:
        return [k for k, (a, b) in enumerate(zip(self.group, self.holonomy), start=2) if a == b]


def theta_comparison(
    G: GroupPresentation, D: int, lie_degree: int = 0, budget: Optional[int] = None, **elimination
) -> ThetaComparison:
    """
    Compare the Chen ranks of G with those of its holonomy Lie algebra.

    With ``lie_degree`` >= 2 the holonomy side is also computed as
    lie.chen_dims of the initial-form presentation, for k = 2..lie_degree.
    """
    group = chen_series(G, D, budget, **elimination).coefficients
    holonomy = holonomy_chen_series(G, D, budget, **elimination).coefficients
    lie: Tuple[int, ...] = ()
    if lie_degree >= 2:
        lie = chen_dims(initial_form_presentation(G), lie_degree, **elimination).dims[1:]
    comparison = ThetaComparison(G.name, group, holonomy, lie)
    logger.info(
        "compared Chen ranks",
        extra={"group": G.name, "equal_degrees": comparison.equal_degrees(), "bounded": comparison.bounded},
    )
    return comparison
