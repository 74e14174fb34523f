"""
Stirling, Lah, Bell and Witt numbers and the Möbius function.
"""

from functools import lru_cache
from math import comb, factorial

from sympy import divisors, factorint

from grlie.services.combinatorics.exceptions import InvalidArgumentError

KINDS = ("stirling1", "stirling2", "lah")


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise InvalidArgumentError(f"negative argument ({n}, {k})")
    if k > n:
        raise InvalidArgumentError(f"k={k} exceeds n={n}")


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0:
        return 0
    return _stirling1(n - 1, k - 1) + (n - 1) * _stirling1(n - 1, k)


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0:
        return 0
    return _stirling2(n - 1, k - 1) + k * _stirling2(n - 1, k)


@lru_cache(maxsize=None)
def _lah(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0:
        return 0
    return _lah(n - 1, k - 1) + (n - 1 + k) * _lah(n - 1, k)


def special_number(kind: str, n: int, k: int) -> int:
    """
    Unsigned Stirling numbers of the first kind c(n,k), Stirling numbers of
    the second kind S(n,k), or Lah numbers L(n,k), by their recurrences.

    Args:
        kind: one of "stirling1", "stirling2", "lah"
        n: size
        k: number of cycles / blocks, 0 <= k <= n

    Raises:
        InvalidArgumentError: for unknown kinds, negative arguments or k > n
    """
    _check(n, k)
    if kind == "stirling1":
        return _stirling1(n, k)
    if kind == "stirling2":
        return _stirling2(n, k)
    if kind == "lah":
        return _lah(n, k)
    raise InvalidArgumentError(f"unknown kind {kind!r}; expected one of {KINDS}")


def lah_closed(n: int, k: int) -> int:
    """L(n,k) = C(n-1, k-1) n!/k!, with L(0,0) = 1."""
    _check(n, k)
    if n == 0:
        return 1
    if k == 0:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def bell(n: int) -> int:
    """Number of set partitions of an n-set."""
    if n < 0:
        raise InvalidArgumentError("bell numbers need n >= 0")
    return sum(_stirling2(n, k) for k in range(n + 1))


def mobius(n: int) -> int:
    """
    Möbius function from the prime factorization of n.

    Raises:
        InvalidArgumentError: if n < 1
    """
    if n < 1:
        raise InvalidArgumentError("mobius needs n >= 1")
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def witt(n: int, k: int) -> int:
    """Rank of the degree-k part of the free Lie algebra on n generators."""
    if n < 0 or k < 1:
        raise InvalidArgumentError("witt needs n >= 0 and k >= 1")
    total = sum(mobius(k // d) * n ** d for d in divisors(k))
    return total // k
