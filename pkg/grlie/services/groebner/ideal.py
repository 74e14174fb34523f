"""
Polynomial ideals over the rationals and their Gröbner bases.

Bases are computed with sympy's Buchberger implementation in a ring whose
variables are permuted and ordered according to a MonomialOrder, then mapped
back to the ambient ring. Over QQ the reduced bases are monic, which removes
content growth between reductions.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from grlie.services.groebner.exceptions import GroebnerError, RingMismatchError

logger = logging.getLogger(__name__)

MultiPoly = PolyElement

_ORDERS = {"grevlex": grevlex, "lex": lex}

RABINOWITSCH_VARIABLE = "rabinowitsch_y"


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order kind and a variable permutation (None is the identity)."""

    kind: str = "grevlex"
    permutation: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in _ORDERS:
            raise GroebnerError(f"unknown monomial order {self.kind!r}")
        if self.permutation is not None:
            perm = tuple(self.permutation)
            if sorted(perm) != list(range(len(perm))):
                raise GroebnerError(f"{perm} is not a permutation")
            object.__setattr__(self, "permutation", perm)

    def perm(self, n: int) -> Tuple[int, ...]:
        if self.permutation is None:
            return tuple(range(n))
        if len(self.permutation) != n:
            raise GroebnerError(f"permutation has length {len(self.permutation)}, ring has {n} variables")
        return self.permutation

    def ordered_ring(self, ring: PolyRing) -> PolyRing:
        """Ring whose k-th variable is the ambient variable perm[k], with this order."""
        perm = self.perm(ring.ngens)
        return PolyRing(tuple(str(ring.symbols[p]) for p in perm), QQ, _ORDERS[self.kind])

    def forward(self, f: MultiPoly, target: PolyRing) -> MultiPoly:
        perm = self.perm(f.ring.ngens)
        return target.from_dict({tuple(exp[p] for p in perm): c for exp, c in f.items()})

    def backward(self, f: MultiPoly, ring: PolyRing) -> MultiPoly:
        perm = self.perm(ring.ngens)
        out = {}
        for exp, c in f.items():
            original = [0] * ring.ngens
            for k, p in enumerate(perm):
                original[p] = exp[k]
            out[tuple(original)] = c
        return ring.from_dict(out)


GREVLEX = MonomialOrder()


@dataclass(frozen=True)
class Ideal:
    """
    Ideal of a polynomial ring over QQ given by generators.

    Zero generators are dropped. Gröbner bases are cached per order.
    """

    ring: PolyRing
    generators: Tuple[MultiPoly, ...] = ()
    _bases: Dict[MonomialOrder, Tuple[MultiPoly, ...]] = field(
        default_factory=dict, compare=False, repr=False, hash=False
    )

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("generator does not belong to the ideal's ring")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def nvars(self) -> int:
        return self.ring.ngens

    def is_zero(self) -> bool:
        return not self.generators


def _check_ring(f: MultiPoly, I: Ideal) -> None:
    if f.ring != I.ring:
        raise RingMismatchError("polynomial does not belong to the ideal's ring")


def _ordered_basis(I: Ideal, order: MonomialOrder) -> Tuple[PolyRing, List[MultiPoly]]:
    target = order.ordered_ring(I.ring)
    cached = I._bases.get(order)
    if cached is None:
        if I.is_zero():
            cached = ()
        else:
            seq = [order.forward(g, target) for g in I.generators]
            cached = tuple(groebner(seq, target, method="buchberger"))
            logger.debug(
                "computed Gröbner basis",
                extra={"generators": len(seq), "basis": len(cached), "order": order.kind},
            )
        I._bases[order] = cached
    return target, list(cached)


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX) -> List[MultiPoly]:
    """
    Reduced, monic Gröbner basis of I, in the ambient ring.

    The zero ideal has the empty basis.
    """
    _, basis = _ordered_basis(I, order)
    return [order.backward(g, I.ring) for g in basis]


def leading_monomials(I: Ideal, order: MonomialOrder = GREVLEX) -> List[Tuple[int, ...]]:
    """Leading exponents of the reduced basis, in ambient variable positions."""
    target, basis = _ordered_basis(I, order)
    perm = order.perm(I.nvars)
    out = []
    for g in basis:
        exp = g.LM
        original = [0] * I.nvars
        for k, p in enumerate(perm):
            original[p] = exp[k]
        out.append(tuple(original))
    return out


def normal_form(f: MultiPoly, I: Ideal, order: MonomialOrder = GREVLEX) -> MultiPoly:
    """Remainder of f on division by the reduced Gröbner basis of I."""
    _check_ring(f, I)
    target, basis = _ordered_basis(I, order)
    g = order.forward(f, target)
    if basis:
        g = g.rem(basis)
    return order.backward(g, I.ring)


def ideal_membership(f: MultiPoly, I: Ideal) -> bool:
    return not normal_form(f, I)


def _contains_one(I: Ideal) -> bool:
    _, basis = _ordered_basis(I, GREVLEX)
    return any(g.is_ground and g for g in basis)


def radical_membership(f: MultiPoly, I: Ideal, max_power: int = 4) -> bool:
    """
    Whether some power of f lies in I.

    Small powers are tried first; the decision is made by the Rabinowitsch
    trick: f is in the radical iff 1 lies in I + (1 - y f) with y a new variable.
    """
    _check_ring(f, I)
    if not f:
        return True
    power = f
    for _ in range(max_power):
        if ideal_membership(power, I):
            return True
        power = power * f

    names = tuple(str(s) for s in I.ring.symbols)
    extra = RABINOWITSCH_VARIABLE
    while extra in names:
        extra += "_"
    bigger = PolyRing(names + (extra,), QQ, grevlex)

    def lift(g: MultiPoly) -> MultiPoly:
        return bigger.from_dict({exp + (0,): c for exp, c in g.items()})

    y = bigger.gens[-1]
    extended = Ideal(bigger, tuple(lift(g) for g in I.generators) + (bigger.one - y * lift(f),))
    return _contains_one(extended)


def krull_dimension(I: Ideal) -> int:
    """
    Dimension of V(I) in affine space; -1 when I is the unit ideal.

    Computed as the largest set of variables containing the support of no
    leading monomial of a grevlex basis.
    """
    if I.is_zero():
        return I.nvars
    if _contains_one(I):
        return -1
    supports = [frozenset(i for i, e in enumerate(exp) if e) for exp in leading_monomials(I)]
    for size in range(I.nvars, -1, -1):
        for subset in combinations(range(I.nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def ideal(ring: PolyRing, generators: Sequence[MultiPoly]) -> Ideal:
    return Ideal(ring, tuple(generators))
