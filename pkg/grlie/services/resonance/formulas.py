"""
Pointwise checks of Aomoto Betti number formulas.

For a = (a1, a2) in A^1 + B^1:

    tensor A (x) B:   b1 = b1(A) + b1(B) at the origin, b1(A, a1) when a2 = 0,
                      b1(B, a2) when a1 = 0, and 0 otherwise;
    coproduct A v B:  b1 = b1(A, a1) + b1(B, a2) + 1 when both parts are nonzero,
                      b1(A, a1) + b1(B) when only a1 is nonzero (and symmetrically),
                      b1(A) + b1(B) at the origin.

For an algebra vanishing above degree 2, b2(A, a) = b1(A, a) + chi at a != 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from grlie.config import settings
from grlie.services.cohomology.algebra import TwoStepAlgebra, coproduct_algebra, tensor_algebra
from grlie.services.cohomology.exceptions import TopDegreeError
from grlie.services.numeric.sampling import make_rng, sample_nonzero_point
from grlie.services.resonance.aomoto import aomoto_b1, aomoto_b2
from grlie.services.resonance.exceptions import ResonanceError

logger = logging.getLogger(__name__)

Point = List[Fraction]


@dataclass(frozen=True)
class BettiMismatch:
    construction: str
    a1: Tuple[Fraction, ...]
    a2: Tuple[Fraction, ...]
    expected: int
    observed: int


@dataclass(frozen=True)
class BettiFormulaReport:
    trials: int
    mismatches: Tuple[BettiMismatch, ...]

    @property
    def holds(self) -> bool:
        return not self.mismatches


def expected_tensor_b1(A: TwoStepAlgebra, B: TwoStepAlgebra, a1: Sequence, a2: Sequence) -> int:
    z1, z2 = not any(a1), not any(a2)
    if z1 and z2:
        return A.b1 + B.b1
    if z2:
        return aomoto_b1(A, a1)
    if z1:
        return aomoto_b1(B, a2)
    return 0


def expected_coproduct_b1(A: TwoStepAlgebra, B: TwoStepAlgebra, a1: Sequence, a2: Sequence) -> int:
    z1, z2 = not any(a1), not any(a2)
    if z1 and z2:
        return A.b1 + B.b1
    if z2:
        return aomoto_b1(A, a1) + B.b1
    if z1:
        return A.b1 + aomoto_b1(B, a2)
    return aomoto_b1(A, a1) + aomoto_b1(B, a2) + 1


def _sample_pair(A: TwoStepAlgebra, B: TwoStepAlgebra, trial: int, rng, bound: int) -> Tuple[Point, Point]:
    """Cycle through the four zero patterns so that every branch is exercised."""
    a1 = sample_nonzero_point(A.b1, rng, bound) if trial % 4 in (0, 1) else [Fraction(0)] * A.b1
    a2 = sample_nonzero_point(B.b1, rng, bound) if trial % 4 in (0, 2) else [Fraction(0)] * B.b1
    return a1, a2


def betti_formula_check(
    A: TwoStepAlgebra,
    B: TwoStepAlgebra,
    trials: int,
    seed: Optional[int] = None,
    sample_range: Optional[int] = None,
) -> BettiFormulaReport:
    """
    Compare b1 of the tensor and coproduct algebras with the product formulas.

    Raises:
        ResonanceError: if trials < 1
    """
    if trials < 1:
        raise ResonanceError("need at least one trial")
    config = settings.get_service_config("resonance")
    seed = config["seed"] if seed is None else seed
    bound = config["sample_range"] if sample_range is None else sample_range
    rng = make_rng(seed, f"betti:{A.name}:{B.name}")
    tensor, coproduct = tensor_algebra(A, B), coproduct_algebra(A, B)

    mismatches: List[BettiMismatch] = []
    for trial in range(trials):
        a1, a2 = _sample_pair(A, B, trial, rng, bound)
        point = a1 + a2
        for construction, algebra, expected in (
            ("tensor", tensor, expected_tensor_b1(A, B, a1, a2)),
            ("coproduct", coproduct, expected_coproduct_b1(A, B, a1, a2)),
        ):
            observed = aomoto_b1(algebra, point)
            if observed != expected:
                mismatches.append(BettiMismatch(construction, tuple(a1), tuple(a2), expected, observed))
    report = BettiFormulaReport(trials, tuple(mismatches))
    logger.info("checked Betti formulas", extra={"trials": trials, "mismatches": len(mismatches)})
    return report


@dataclass(frozen=True)
class LemmaReport:
    checked: int
    failures: Tuple[Tuple[Fraction, ...], ...]

    @property
    def holds(self) -> bool:
        return not self.failures


def lemma_resonance2_check(
    A: TwoStepAlgebra,
    points: Optional[Sequence[Sequence]] = None,
    samples: int = 100,
    seed: Optional[int] = None,
) -> LemmaReport:
    """
    Check b2 - rank(delta^1_a) = b1(A, a) + chi at nonzero points.

    Points are sampled when none are given.

    Raises:
        TopDegreeError: unless A is flagged as vanishing above degree 2
    """
    if not A.top_degree_at_most_two:
        raise TopDegreeError(f"{A.name or 'algebra'} is not known to vanish above degree 2")
    if points is None:
        config = settings.get_service_config("resonance")
        rng = make_rng(config["seed"] if seed is None else seed, f"lemma:{A.name}")
        points = [sample_nonzero_point(A.b1, rng, config["sample_range"]) for _ in range(samples)]
    chi = A.euler_characteristic
    failures = []
    checked = 0
    for a in points:
        if not any(a):
            continue
        checked += 1
        if aomoto_b2(A, a) != aomoto_b1(A, a) + chi:
            failures.append(tuple(Fraction(v) for v in a))
    return LemmaReport(checked, tuple(failures))
