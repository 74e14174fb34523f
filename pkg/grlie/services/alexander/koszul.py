"""
Koszul complex of S = QQ[x_1..x_n] and lifts through its second differential.

Chains of degree p are vectors over S indexed by the lexicographic
p-subsets of range(n) (see ``numeric.exterior``), and

    delta(e_S) = sum_l (-1)^l x_{S_l} e_{S minus S_l}.

The monomial homotopy h(x^a e_S) = x^(a - e_i) e_i ^ e_S, with
i = min(supp(a) | S) and h = 0 when i lies in S, satisfies
delta h + h delta = id away from the constants, so h lifts every cycle.
"""

import logging
from typing import Dict, List, Optional, Sequence

from sympy.polys.rings import PolyRing

from grlie.services.alexander.exceptions import AlexanderError, NotACycleError
from grlie.services.numeric.exterior import wedge_basis, wedge_index, wedge_sign
from grlie.services.numeric.matrices import SparseMatrix
from grlie.services.numeric.polynomials import MultiPoly, homogeneous_component, poly_ring

logger = logging.getLogger(__name__)

Chain = List[MultiPoly]


def _check_degree(n: int, p: int) -> None:
    if not 1 <= p <= n:
        raise AlexanderError(f"Koszul degree {p} out of range for {n} variables")


def koszul_differential(n: int, p: int, ring: Optional[PolyRing] = None) -> SparseMatrix:
    """
    Matrix of delta_p: wedge^p -> wedge^(p-1), one column per p-subset.

    Raises:
        AlexanderError: if p is not in 1..n
    """
    _check_degree(n, p)
    ring = ring or poly_ring(n)
    target = wedge_index(n, p - 1)
    entries = {}
    for col, subset in enumerate(wedge_basis(n, p)):
        for l, i in enumerate(subset):
            row = target[subset[:l] + subset[l + 1:]]
            entries[(row, col)] = ring.gens[i] if l % 2 == 0 else -ring.gens[i]
    return SparseMatrix(len(target), len(wedge_basis(n, p)), entries, ring.to_domain())


def koszul_apply(n: int, p: int, chain: Sequence[MultiPoly], ring: Optional[PolyRing] = None) -> Chain:
    """delta_p applied to a degree-p chain."""
    _check_degree(n, p)
    ring = ring or poly_ring(n)
    basis = wedge_basis(n, p)
    if len(chain) != len(basis):
        raise AlexanderError(f"chain has length {len(chain)}, expected {len(basis)}")
    target = wedge_index(n, p - 1)
    out = [ring.zero] * len(target)
    for f, subset in zip(chain, basis):
        if not f:
            continue
        for l, i in enumerate(subset):
            term = f * ring.gens[i]
            row = target[subset[:l] + subset[l + 1:]]
            out[row] = out[row] + term if l % 2 == 0 else out[row] - term
    return out


def koszul_homotopy(n: int, p: int, chain: Sequence[MultiPoly], ring: Optional[PolyRing] = None) -> Chain:
    """The monomial homotopy h: wedge^p -> wedge^(p+1), termwise."""
    ring = ring or poly_ring(n)
    basis = wedge_basis(n, p)
    target = wedge_index(n, p + 1)
    out: List[Dict] = [dict() for _ in target]
    for f, subset in zip(chain, basis):
        for exp, c in f.items():
            support = [k for k, e in enumerate(exp) if e]
            if not support:
                continue
            i = support[0]
            if subset and subset[0] <= i:
                continue
            lowered = list(exp)
            lowered[i] -= 1
            sign, merged = wedge_sign(i, subset)
            slot = out[target[merged]]
            key = tuple(lowered)
            slot[key] = slot.get(key, ring.domain.zero) + sign * c
    return [ring.from_dict(terms) for terms in out]


def _require_cycle(n: int, v: Sequence[MultiPoly], ring: PolyRing) -> None:
    if len(v) != n:
        raise AlexanderError(f"vector has length {len(v)}, expected {n}")
    if any(koszul_apply(n, 1, v, ring)):
        raise NotACycleError("sum of v_i x_i is not zero")


def koszul_lift(v: Sequence[MultiPoly], ring: Optional[PolyRing] = None) -> Chain:
    """
    A vector w over the pairs i < j with delta_2(w) = v.

    Args:
        v: length-n vector over S with sum v_i x_i = 0
        ring: polynomial ring of the entries (defaults to x1..xn)

    Returns:
        The monomial-homotopy preimage, re-verified exactly

    Raises:
        NotACycleError: if v is not a cycle
    """
    n = len(v)
    ring = ring or (v[0].ring if v else poly_ring(max(n, 1)))
    _require_cycle(n, v, ring)
    if n < 2:
        return []
    w = koszul_homotopy(n, 1, v, ring)
    if koszul_apply(n, 2, w, ring) != list(v):
        raise NotACycleError("homotopy lift failed its postcondition")
    return w


def _euler_operator(n: int, f: MultiPoly, j: int, out: Chain) -> None:
    """Accumulate D(f e_j) = sum_i (df/dx_i) e_i ^ e_j into ``out``."""
    index = wedge_index(n, 2)
    for i in range(n):
        if i == j:
            continue
        derivative = f.diff(f.ring.gens[i])
        if not derivative:
            continue
        sign, merged = wedge_sign(i, (j,))
        slot = index[merged]
        out[slot] = out[slot] + derivative if sign > 0 else out[slot] - derivative


def koszul_lift_euler(v: Sequence[MultiPoly], ring: Optional[PolyRing] = None) -> Chain:
    """
    Alternative lift w = sum_d D(v_d) / (d + 1), with v_d the degree-d part of v.

    Raises:
        NotACycleError: if v is not a cycle
    """
    n = len(v)
    ring = ring or (v[0].ring if v else poly_ring(max(n, 1)))
    _require_cycle(n, v, ring)
    if n < 2:
        return []
    w = [ring.zero] * len(wedge_basis(n, 2))
    degrees = sorted({sum(exp) for f in v for exp in f.keys()})
    for d in degrees:
        part: Chain = [ring.zero] * len(w)
        for j, f in enumerate(v):
            _euler_operator(n, homogeneous_component(f, d), j, part)
        w = [a + b.quo_ground(d + 1) for a, b in zip(w, part)]
    if koszul_apply(n, 2, w, ring) != list(v):
        raise NotACycleError("Euler lift failed its postcondition")
    return w
