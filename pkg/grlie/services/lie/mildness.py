"""
Anick's mildness criterion for presentations with quadratic initial forms.

A presentation with n generators and m relators of weight 2 is mild iff
Hilb(U(L(G)), t) = 1 / (1 - n t + m t^2). The enveloping series on the left
is prod_k (1 - t^k)^(-phi_k) with phi_k taken from the initial-form Lie
algebra.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from grlie.services.combinatorics.lcs import pbw_series
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.lie.presentation import initial_form_presentation
from grlie.services.lie.quotient import graded_dims
from grlie.services.numeric.series import UniRationalFunction, series_expand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MildnessVerdict:
    label: str
    max_degree: int
    first_failure: Optional[int]
    expected: Tuple[int, ...]
    observed: Tuple[int, ...]
    ranks: Tuple[int, ...]

    @property
    def mild(self) -> bool:
        return self.first_failure is None

    def describe(self) -> str:
        if self.mild:
            return f"mild up to {self.max_degree}"
        k = self.first_failure
        return f"fails at degree {k}: expected {self.expected[k]}, observed {self.observed[k]}"


def anick_series(n: int, m: int, K: int) -> Tuple[int, ...]:
    """Coefficients of 1 / (1 - n t + m t^2) through t^K."""
    return tuple(int(c) for c in series_expand(UniRationalFunction((1,), (1, -n, m)), K))


def mildness_check(G: GroupPresentation, K: int, budget: Optional[int] = None) -> MildnessVerdict:
    """
    Compare the PBW series of the initial-form Lie algebra with Anick's series.

    Raises:
        WeightOneRelatorError: if a relator is not a commutator
    """
    L = initial_form_presentation(G)
    ranks = graded_dims(L, K, budget).dims
    observed = tuple(pbw_series(ranks, K))
    expected = anick_series(G.ngens, G.nrels, K)
    failure = next((k for k in range(K + 1) if observed[k] != expected[k]), None)
    verdict = MildnessVerdict(G.name, K, failure, expected, observed, ranks)
    logger.info("checked mildness", extra={"group": G.name, "verdict": verdict.describe()})
    return verdict
