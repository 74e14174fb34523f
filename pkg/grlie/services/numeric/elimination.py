"""
Incremental sparse elimination with modular certification.

Large ranks (Lie ideal layers, truncated module filtrations) are computed on
row dicts ``{column: value}`` by semi-echelon reduction with the minimal
column as pivot. Each elimination runs over several independent 31-bit
primes; the pivot columns and the selected independent rows must agree,
otherwise fresh primes are tried and, as a last resort, the elimination is
repeated over the rationals.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.ntheory import nextprime, prevprime
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from grlie.services.numeric.exceptions import PrimeDisagreementError
from grlie.services.numeric.parallel import parallel_map

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
Row = Dict[int, Number]

PRIME_LOW = 2 ** 30
PRIME_HIGH = 2 ** 31


class EchelonBasis:
    """
    Semi-echelon basis of a row space over GF(p) or over QQ.

    Every stored row is normalized so that its pivot (its minimal column)
    has coefficient 1. ``modulus=None`` selects exact rational arithmetic.
    """

    def __init__(self, modulus: Optional[int] = None):
        self.modulus = modulus
        self.pivots: Dict[int, Dict[int, Number]] = {}

    def _convert(self, row: Row) -> Dict[int, Number]:
        p = self.modulus
        if p is None:
            return {c: Fraction(v) for c, v in row.items() if v}
        out = {}
        for c, v in row.items():
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise PrimeDisagreementError(f"prime {p} divides a denominator")
                v = v.numerator * pow(v.denominator, -1, p)
            v %= p
            if v:
                out[c] = v
        return out

    def reduce(self, row: Row) -> Dict[int, Number]:
        """Reduce a row against the basis; the result is zero iff the row lies in the span."""
        work = self._convert(row)
        p = self.modulus
        pivots = self.pivots
        while work:
            col = min(work)
            prow = pivots.get(col)
            if prow is None:
                return work
            factor = work[col]
            for c, v in prow.items():
                if p is None:
                    new = work.get(c, 0) - factor * v
                else:
                    new = (work.get(c, 0) - factor * v) % p
                if new:
                    work[c] = new
                else:
                    work.pop(c, None)
        return work

    def add(self, row: Row) -> bool:
        """Insert a row; returns True if it was independent of the basis."""
        work = self.reduce(row)
        if not work:
            return False
        col = min(work)
        lead = work[col]
        if self.modulus is None:
            inv = 1 / lead
            self.pivots[col] = {c: v * inv for c, v in work.items()}
        else:
            inv = pow(lead, -1, self.modulus)
            self.pivots[col] = {c: (v * inv) % self.modulus for c, v in work.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> Tuple[int, ...]:
        return tuple(sorted(self.pivots))


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of a certified elimination."""

    rank: int
    pivot_columns: Tuple[int, ...]
    independent_rows: Tuple[int, ...]
    method: str
    primes: Tuple[int, ...] = ()


def prime_pool(seed: int, count: int, attempt: int = 1) -> Tuple[int, ...]:
    """
    ``count`` distinct primes in [2^30, 2^31) derived from a seed.

    The same (seed, attempt) always gives the same primes.
    """
    rng = random.Random(f"grlie-primes:{seed}:{attempt}")
    primes: List[int] = []
    while len(primes) < count:
        p = nextprime(rng.randrange(PRIME_LOW, PRIME_HIGH))
        if p >= PRIME_HIGH:
            p = prevprime(PRIME_HIGH)
        if p not in primes:
            primes.append(p)
    return tuple(primes)


def eliminate(rows: Sequence[Row], modulus: Optional[int] = None) -> EliminationResult:
    """Single elimination pass over one field."""
    basis = EchelonBasis(modulus)
    independent = [i for i, row in enumerate(rows) if basis.add(row)]
    method = "rational" if modulus is None else "modular"
    primes = () if modulus is None else (modulus,)
    return EliminationResult(basis.rank, basis.pivot_columns(), tuple(independent), method, primes)


def _eliminate_job(job: Tuple[Sequence[Row], Optional[int]]) -> EliminationResult:
    rows, modulus = job
    return eliminate(rows, modulus)


def _modular_consensus(rows: Sequence[Row], primes: Tuple[int, ...], workers: int) -> EliminationResult:
    results = parallel_map(_eliminate_job, [(rows, p) for p in primes], workers)
    first = results[0]
    for other in results[1:]:
        if (other.pivot_columns, other.independent_rows) != (first.pivot_columns, first.independent_rows):
            raise PrimeDisagreementError(
                f"primes {first.primes[0]} and {other.primes[0]} disagree "
                f"(ranks {first.rank} and {other.rank})"
            )
    return EliminationResult(first.rank, first.pivot_columns, first.independent_rows, "modular", primes)


def certified_elimination(
    rows: Sequence[Row],
    primes: int = 2,
    retries: int = 3,
    seed: int = 0,
    workers: int = 1,
) -> EliminationResult:
    """
    Eliminate rows over ``primes`` independent primes with mandatory agreement.

    Args:
        rows: row dicts {column: int or Fraction}
        primes: number of primes per attempt
        retries: attempts with fresh primes before falling back to QQ
        seed: seed for the prime choice
        workers: process count for the per-prime passes

    Returns:
        EliminationResult with rank, pivot columns and independent row indices
    """
    try:
        for attempt in Retrying(
            retry=retry_if_exception_type(PrimeDisagreementError),
            stop=stop_after_attempt(retries),
        ):
            with attempt:
                pool = prime_pool(seed, primes, attempt.retry_state.attempt_number)
                return _modular_consensus(rows, pool, workers)
    except RetryError as exc:
        logger.warning(
            "modular eliminations disagree; falling back to rational arithmetic",
            extra={"rows": len(rows), "cause": str(exc.last_attempt.exception())},
        )
    return eliminate(rows, None)


def certified_rank(rows: Sequence[Row], **kwargs) -> int:
    """Rank of a sparse row set, certified as in ``certified_elimination``."""
    return certified_elimination(rows, **kwargs).rank
