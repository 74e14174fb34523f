"""
Index conventions for exterior powers.

Basis elements e_S of the p-th exterior power are indexed by increasing
tuples S, listed in lexicographic order. The degree-2 part (pairs i < j) is
the common column order of cup-product matrices, Lie relators and Alexander
module presentations.
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, Tuple


@lru_cache(maxsize=None)
def wedge_basis(n: int, p: int) -> Tuple[Tuple[int, ...], ...]:
    """Increasing p-subsets of range(n) in lexicographic order."""
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def wedge_index(n: int, p: int) -> Dict[Tuple[int, ...], int]:
    return {subset: pos for pos, subset in enumerate(wedge_basis(n, p))}


def pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs i < j in lexicographic order."""
    return wedge_basis(n, 2)


def pair_index(n: int) -> Dict[Tuple[int, int], int]:
    return wedge_index(n, 2)


def wedge_sign(i: int, subset: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """
    e_i ^ e_S as sign * e_T with T increasing.

    Returns (0, ()) when i is already in S.
    """
    if i in subset:
        return 0, ()
    position = sum(1 for s in subset if s < i)
    merged = subset[:position] + (i,) + subset[position:]
    return (-1) ** position, merged
