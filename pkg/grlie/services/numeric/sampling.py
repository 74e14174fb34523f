"""
Seeded sampling of rational points.
"""

import random
from fractions import Fraction
from typing import List


def make_rng(seed: int, stream: str = "") -> random.Random:
    """Independent deterministic generator for a named stream of a seed."""
    return random.Random(f"grlie:{stream}:{seed}")


def sample_rational(rng: random.Random, bound: int = 100) -> Fraction:
    """Numerator and denominator uniform in [-bound, bound], denominator nonzero."""
    numerator = rng.randint(-bound, bound)
    denominator = 0
    while denominator == 0:
        denominator = rng.randint(-bound, bound)
    return Fraction(numerator, denominator)


def sample_point(dim: int, rng: random.Random, bound: int = 100) -> List[Fraction]:
    return [sample_rational(rng, bound) for _ in range(dim)]


def sample_nonzero_point(dim: int, rng: random.Random, bound: int = 100) -> List[Fraction]:
    """A sampled point other than the origin."""
    while True:
        point = sample_point(dim, rng, bound)
        if any(point):
            return point
