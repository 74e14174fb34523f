"""
Free Lie algebras inside the tensor algebra.

Lie elements are dicts from words (tuples of generator indices) to
coefficients. The Hall set is the Lyndon basis with standard bracketing: for
a Lyndon word w = uv with v its longest proper Lyndon suffix, P_w = [P_u, P_v].
Each P_w equals w plus lexicographically larger words, so a Lie element is
determined by its coefficients on Lyndon words and is rewritten in the Hall
basis by repeatedly cancelling its smallest word.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from grlie.config import settings
from grlie.services.combinatorics.numbers import witt
from grlie.services.lie.exceptions import NonHomogeneousRelatorError, ResourceBudgetError

WordT = Tuple[int, ...]
Number = Union[int, Fraction]
LieElement = Dict[WordT, Number]


def lyndon_words(n: int, K: int) -> Iterator[WordT]:
    """All Lyndon words of length <= K over n letters, in lexicographic order (Duval)."""
    if n < 1 or K < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        period = len(w)
        while len(w) < K:
            w.append(w[-period])
        while w and w[-1] == n - 1:
            w.pop()


@lru_cache(maxsize=None)
def is_lyndon(word: WordT) -> bool:
    return bool(word) and all(word < word[i:] for i in range(1, len(word)))


@lru_cache(maxsize=None)
def standard_factorization(word: WordT) -> Tuple[WordT, WordT]:
    """(u, v) with v the longest proper Lyndon suffix of a Lyndon word of length >= 2."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise NonHomogeneousRelatorError(f"{word} has no proper Lyndon suffix")


@dataclass(frozen=True)
class HallElement:
    """Standard bracketing of a Lyndon word."""

    word: WordT

    def __post_init__(self):
        if not is_lyndon(tuple(self.word)):
            raise NonHomogeneousRelatorError(f"{self.word} is not a Lyndon word")
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def is_leaf(self) -> bool:
        return len(self.word) == 1

    @property
    def left(self) -> Optional["HallElement"]:
        return None if self.is_leaf else HallElement(standard_factorization(self.word)[0])

    @property
    def right(self) -> Optional["HallElement"]:
        return None if self.is_leaf else HallElement(standard_factorization(self.word)[1])

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        if self.is_leaf:
            g = self.word[0]
            return labels[g] if labels else f"x{g + 1}"
        return f"[{self.left.format(labels)},{self.right.format(labels)}]"

    def __str__(self) -> str:
        return self.format()


def check_budget(n: int, k: int, budget: int) -> int:
    """
    witt(n, k), after checking it against the Hall budget.

    Raises:
        ResourceBudgetError: if the free Lie layer is larger than ``budget``
    """
    size = witt(n, k)
    if size > budget:
        raise ResourceBudgetError(
            f"free Lie algebra on {n} generators has dimension {size} in degree {k}, budget is {budget}"
        )
    return size


def hall_basis(n: int, K: int, budget: Optional[int] = None) -> List[List[HallElement]]:
    """
    Hall elements of degrees 1..K, one list per degree.

    ``budget`` defaults to GRLIE_HALL_BUDGET.

    Raises:
        ResourceBudgetError: if some degree exceeds ``budget`` elements
    """
    budget = settings.GRLIE_HALL_BUDGET if budget is None else budget
    for k in range(1, K + 1):
        check_budget(n, k, budget)
    layers: List[List[HallElement]] = [[] for _ in range(K)]
    for word in lyndon_words(n, K):
        layers[len(word) - 1].append(HallElement(word))
    return layers


@lru_cache(maxsize=None)
def lyndon_index(n: int, k: int) -> Dict[WordT, int]:
    """Column index of each degree-k Lyndon word, in lexicographic order."""
    words = [w for w in lyndon_words(n, k) if len(w) == k]
    return {w: pos for pos, w in enumerate(words)}


def _add(out: Dict[WordT, Number], word: WordT, value: Number) -> None:
    new = out.get(word, 0) + value
    if new:
        out[word] = new
    else:
        out.pop(word, None)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """[a, b] = ab - ba in the tensor algebra."""
    out: Dict[WordT, Number] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            c = ca * cb
            _add(out, wa + wb, c)
            _add(out, wb + wa, -c)
    return out


def bracket_generator(i: int, b: LieElement) -> LieElement:
    """[x_i, b]."""
    out: Dict[WordT, Number] = {}
    for w, c in b.items():
        _add(out, (i,) + w, c)
        _add(out, w + (i,), -c)
    return out


@lru_cache(maxsize=None)
def _expand_word(word: WordT) -> Tuple[Tuple[WordT, int], ...]:
    if len(word) == 1:
        return ((word, 1),)
    u, v = standard_factorization(word)
    return tuple(bracket(dict(_expand_word(u)), dict(_expand_word(v))).items())


def hall_expand(h: Union[HallElement, WordT]) -> LieElement:
    """Tensor-algebra expansion of a Hall element."""
    word = h.word if isinstance(h, HallElement) else tuple(h)
    return dict(_expand_word(word))


def combination_expand(coeffs: Dict[WordT, Number]) -> LieElement:
    """Expansion of sum c_w P_w over Lyndon words w."""
    out: Dict[WordT, Number] = {}
    for word, c in coeffs.items():
        if c:
            for w, d in _expand_word(word):
                _add(out, w, c * d)
    return out


def to_hall(element: LieElement) -> Dict[WordT, Number]:
    """
    Hall coordinates {Lyndon word: coefficient} of a Lie element.

    Raises:
        NonHomogeneousRelatorError: if the input is not a Lie element
    """
    work = {w: c for w, c in element.items() if c}
    coords: Dict[WordT, Number] = {}
    while work:
        smallest = min(work)
        if not is_lyndon(smallest):
            raise NonHomogeneousRelatorError(f"not a Lie element: leading word {smallest} is not Lyndon")
        c = work[smallest]
        coords[smallest] = c
        for w, d in _expand_word(smallest):
            _add(work, w, -c * d)
    return coords


def lyndon_projection(element: LieElement, index: Dict[WordT, int]) -> Dict[int, Number]:
    """Coefficients of a homogeneous Lie element on Lyndon words, as a sparse row."""
    return {index[w]: c for w, c in element.items() if w in index}
