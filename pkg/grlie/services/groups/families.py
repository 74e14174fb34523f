"""
Built-in group presentations and product constructions.

Pure virtual braid groups use generators x_ij for ordered pairs of distinct
strands. The upper pairs i < j come first in colex order (x12, x13, x23, x14,
...); for vP(n) their transposes follow in the same order (x21, x31, x32, ...).
Triangle relations x_ij x_ik x_jk = x_jk x_ik x_ij are stored as the single
relator x_ij x_ik x_jk x_ij^-1 x_ik^-1 x_jk^-1.
"""

import logging
import re
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from grlie.services.groups.exceptions import GroupError, UnknownFamilyError
from grlie.services.groups.presentation import GroupPresentation, Word

logger = logging.getLogger(__name__)


def _check_size(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise GroupError(f"family parameter must be >= {minimum}, got {n}")


def _pair_label(i: int, j: int, n: int) -> str:
    if n < 10:
        return f"x{i + 1}{j + 1}"
    return f"x{i + 1}_{j + 1}"


def upper_pairs(n: int) -> List[Tuple[int, int]]:
    """Pairs i < j in colex order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(n) for i in range(j)]


def _triangle(a: int, b: int, c: int) -> Word:
    x = Word.generator
    return x(a) * x(b) * x(c) * x(a, -1) * x(b, -1) * x(c, -1)


def free(n: int) -> GroupPresentation:
    _check_size(n)
    return GroupPresentation(tuple(f"x{i + 1}" for i in range(n)), (), f"F{n}")


def integers() -> GroupPresentation:
    return GroupPresentation(("t",), (), "Z")


def abelian(k: int) -> GroupPresentation:
    """Z^k with all generator commutators as relators."""
    _check_size(k)
    relators = [
        Word.commutator(Word.generator(i), Word.generator(j)) for i in range(k) for j in range(i + 1, k)
    ]
    return GroupPresentation(tuple(f"a{i + 1}" for i in range(k)), tuple(relators), f"Z{k}")


def vP(n: int) -> GroupPresentation:
    """
    Pure virtual braid group on n strands.

    One triangle relator per ordered triple of distinct strands, and one
    commutator per unordered pair of disjoint ordered pairs.
    """
    _check_size(n, 2)
    upper = upper_pairs(n)
    ordered = upper + [(j, i) for i, j in upper]
    index = {pair: pos for pos, pair in enumerate(ordered)}
    labels = tuple(_pair_label(i, j, n) for i, j in ordered)

    relators: List[Word] = []
    for i, j, k in permutations(range(n), 3):
        relators.append(_triangle(index[(i, j)], index[(i, k)], index[(j, k)]))
    for p in range(len(ordered)):
        for q in range(p + 1, len(ordered)):
            if not set(ordered[p]) & set(ordered[q]):
                relators.append(Word.commutator(Word.generator(p), Word.generator(q)))
    return GroupPresentation(labels, tuple(relators), f"vP{n}")


def vP_plus(n: int) -> GroupPresentation:
    """
    Upper pure virtual braid group: generators x_ij with i < j, one triangle
    relator per i < j < k and commutators of generators with disjoint indices.
    """
    _check_size(n, 2)
    upper = upper_pairs(n)
    index = {pair: pos for pos, pair in enumerate(upper)}
    labels = tuple(_pair_label(i, j, n) for i, j in upper)

    relators: List[Word] = []
    for k in range(n):
        for j in range(k):
            for i in range(j):
                relators.append(_triangle(index[(i, j)], index[(i, k)], index[(j, k)]))
    for p in range(len(upper)):
        for q in range(p + 1, len(upper)):
            if not set(upper[p]) & set(upper[q]):
                relators.append(Word.commutator(Word.generator(p), Word.generator(q)))
    return GroupPresentation(labels, tuple(relators), f"vP{n}plus")


def pbar4() -> GroupPresentation:
    """
    The quotient of P_4 by its center, on generators z1..z5.

    Relations: z2 z3 = z3 z2; z2^-1 z4 z2 commutes with z1; and the cyclic
    triples z5 z3 z1 = z3 z1 z5 = z1 z5 z3 and z5 z4 z2 = z4 z2 z5 = z2 z5 z4,
    each contributing two relators.
    """
    z = [Word.generator(i) for i in range(5)]
    z1, z2, z3, z4, z5 = z
    conj = z2.inverse() * z4 * z2

    def cyclic(a: Word, b: Word, c: Word) -> Word:
        # abc = bca
        return a * b * c * (b * c * a).inverse()

    relators = (
        Word.commutator(z2, z3),
        Word.commutator(conj, z1),
        cyclic(z5, z3, z1),
        cyclic(z3, z1, z5),
        cyclic(z5, z4, z2),
        cyclic(z4, z2, z5),
    )
    return GroupPresentation(("z1", "z2", "z3", "z4", "z5"), relators, "Pbar4")


def _merge_labels(left: Sequence[str], right: Sequence[str]) -> Tuple[str, ...]:
    taken = set(left)
    out = list(left)
    for label in right:
        while label in taken:
            label = label + "'"
        taken.add(label)
        out.append(label)
    return tuple(out)


def free_product(G: GroupPresentation, H: GroupPresentation) -> GroupPresentation:
    """Concatenate generators and relators; clashing labels of H get primes."""
    labels = _merge_labels(G.generators, H.generators)
    relators = G.relators + tuple(r.shifted(G.ngens) for r in H.relators)
    return GroupPresentation(labels, relators, f"({G.name} * {H.name})")


def direct_product(G: GroupPresentation, H: GroupPresentation) -> GroupPresentation:
    """Free product plus every cross commutator [g_i, h_j]."""
    base = free_product(G, H)
    cross = tuple(
        Word.commutator(Word.generator(i), Word.generator(G.ngens + j))
        for i in range(G.ngens)
        for j in range(H.ngens)
    )
    return GroupPresentation(base.generators, base.relators + cross, f"({G.name} x {H.name})")


FAMILIES: Dict[str, Callable[..., GroupPresentation]] = {
    "free": free,
    "integers": integers,
    "abelian": abelian,
    "vP": vP,
    "vP_plus": vP_plus,
    "pbar4": pbar4,
}

_PARAMETERLESS = {"integers", "pbar4"}


def family(name: str, parameter: Optional[int] = None) -> GroupPresentation:
    """
    Built-in presentation by family name.

    Args:
        name: one of free, integers, abelian, vP, vP_plus, pbar4
        parameter: n or k for the parametrized families

    Raises:
        UnknownFamilyError: for an unknown name or a missing parameter
    """
    builder = FAMILIES.get(name)
    if builder is None:
        raise UnknownFamilyError(f"unknown group family {name!r}; expected one of {sorted(FAMILIES)}")
    if name in _PARAMETERLESS:
        return builder()
    if parameter is None:
        raise UnknownFamilyError(f"family {name!r} needs a parameter")
    return builder(parameter)


_NAMED = [
    (re.compile(r"^F(\d+)$"), lambda m: free(int(m.group(1)))),
    (re.compile(r"^Z$"), lambda m: integers()),
    (re.compile(r"^Z(\d+)$"), lambda m: abelian(int(m.group(1)))),
    (re.compile(r"^vP(\d+)$"), lambda m: vP(int(m.group(1)))),
    (re.compile(r"^vP(\d+)plus$"), lambda m: vP_plus(int(m.group(1)))),
    (re.compile(r"^Pbar4$"), lambda m: pbar4()),
    (re.compile(r"^vP3model$"), lambda m: free_product(pbar4(), integers()).with_name("vP3model")),
    (re.compile(r"^P3$"), lambda m: direct_product(free(2), integers()).with_name("P3")),
    (re.compile(r"^ZZ(\d+)$"), lambda m: free_product(integers(), abelian(int(m.group(1)))).with_name(f"ZZ{m.group(1)}")),
]


def named_group(text: str) -> GroupPresentation:
    """
    Group from a short name: F<n>, Z, Z<k>, vP<n>, vP<n>plus, Pbar4, vP3model,
    P3 (F2 x Z) or ZZ<k> (Z * Z^k).

    Raises:
        UnknownFamilyError: if the name matches no pattern
    """
    for pattern, build in _NAMED:
        match = pattern.match(text)
        if match:
            group = build(match)
            logger.debug("built group", extra={"family": text, "generators": group.ngens, "relators": group.nrels})
            return group
    raise UnknownFamilyError(f"unknown group name {text!r}")
