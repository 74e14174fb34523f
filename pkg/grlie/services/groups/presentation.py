"""
Words in free groups and finite group presentations.
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

from grlie.services.groups.exceptions import InvalidWordError, PresentationParseError

Letter = Tuple[int, int]

_LETTER = re.compile(r"^(?P<name>[^\s^]+)(?:\^(?P<power>[+-]?\d+))?$")


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """
    Freely reduced word in a free group.

    Letters are (generator index, +1 or -1) pairs; construction reduces
    adjacent inverse pairs.
    """

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if len(letter) != 2 or letter[1] not in (1, -1) or letter[0] < 0:
                raise InvalidWordError(f"bad letter {letter!r}")
        object.__setattr__(self, "letters", _free_reduce(tuple(map(tuple, self.letters))))

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        sign = 1 if exponent > 0 else -1
        return cls(((index, sign),) * abs(exponent))

    @classmethod
    def commutator(cls, a: "Word", b: "Word") -> "Word":
        """a b a^-1 b^-1."""
        return a * b * a.inverse() * b.inverse()

    def inverse(self) -> "Word":
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def max_generator(self) -> int:
        return max((gen for gen, _ in self.letters), default=-1)

    def exponent_sums(self, n: int) -> Tuple[int, ...]:
        """Image in the abelianization Z^n."""
        sums = [0] * n
        for gen, exp in self.letters:
            sums[gen] += exp
        return tuple(sums)

    def shifted(self, offset: int) -> "Word":
        """Same word with every generator index moved by ``offset``."""
        return Word(tuple((gen + offset, exp) for gen, exp in self.letters))


@dataclass(frozen=True)
class GroupPresentation:
    """Finite presentation: labelled generators and relator words."""

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = field(default_factory=tuple)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise InvalidWordError("generator labels must be distinct")
        n = len(self.generators)
        for pos, relator in enumerate(self.relators):
            if not relator.letters:
                raise InvalidWordError(f"relator {pos} reduces to the identity")
            if relator.max_generator() >= n:
                raise InvalidWordError(f"relator {pos} uses a generator index >= {n}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def nrels(self) -> int:
        return len(self.relators)

    def parse_word(self, letters: Sequence[str]) -> Word:
        """
        Word from letter strings such as ``"x12"`` or ``"x12^-1"``.

        Raises:
            PresentationParseError: on unknown generator names or zero powers
        """
        index = {label: i for i, label in enumerate(self.generators)}
        out: List[Letter] = []
        for text in letters:
            match = _LETTER.match(text.strip())
            if not match:
                raise PresentationParseError(f"malformed letter {text!r}")
            name = match.group("name")
            if name not in index:
                raise PresentationParseError(f"unknown generator {name!r}")
            power = int(match.group("power") or 1)
            if power == 0:
                raise PresentationParseError(f"zero power in letter {text!r}")
            sign = 1 if power > 0 else -1
            out.extend([(index[name], sign)] * abs(power))
        return Word(tuple(out))

    def format_word(self, word: Word) -> List[str]:
        return [self.generators[gen] if exp == 1 else f"{self.generators[gen]}^-1" for gen, exp in word]

    def with_name(self, name: str) -> "GroupPresentation":
        return GroupPresentation(self.generators, self.relators, name)
