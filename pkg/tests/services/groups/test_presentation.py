"""Tests for free group words and presentations."""

import pytest

from grlie.services.groups.exceptions import InvalidWordError, PresentationParseError
from grlie.services.groups.families import free
from grlie.services.groups.presentation import GroupPresentation, Word


def test_words_are_freely_reduced(x):
    """Adjacent inverse letters cancel on construction."""
    assert Word(((0, 1), (1, 1), (1, -1), (0, -1))).letters == ()
    assert x(0, -2).letters == ((0, -1), (0, -1))
    assert (x(0) * x(0).inverse()).letters == ()


def test_commutator(commutator):
    """[a, b] = a b a^-1 b^-1 with zero exponent sums."""
    assert commutator.letters == ((0, 1), (1, 1), (0, -1), (1, -1))
    assert commutator.exponent_sums(2) == (0, 0)
    assert commutator.max_generator() == 1
    assert commutator.shifted(2).letters == ((2, 1), (3, 1), (2, -1), (3, -1))


def test_bad_letters():
    """Letters need a non-negative generator and a unit exponent."""
    with pytest.raises(InvalidWordError):
        Word(((0, 2),))
    with pytest.raises(InvalidWordError):
        Word(((-1, 1),))


def test_presentation_validation(x, commutator):
    """Relators must be nontrivial and use known generators."""
    with pytest.raises(InvalidWordError):
        GroupPresentation(("a", "a"))
    with pytest.raises(InvalidWordError):
        GroupPresentation(("a", "b"), (Word(),))
    with pytest.raises(InvalidWordError):
        GroupPresentation(("a",), (commutator,))
    G = GroupPresentation(("a", "b"), (commutator,), "Z2")
    assert (G.ngens, G.nrels) == (2, 1)
    assert G.with_name("other").name == "other"


def test_parse_and_format_words():
    """Letter strings accept powers and format back with inverses."""
    G = free(2)
    word = G.parse_word(["x1", "x2^-2", "x2"])
    assert word.letters == ((0, 1), (1, -1))
    assert G.format_word(word) == ["x1", "x2^-1"]
    assert G.parse_word([" x1^+2 "]).letters == ((0, 1), (0, 1))


@pytest.mark.parametrize("letters", [["y"], ["x1^0"], ["x1^"], ["x1 x2"]])
def test_parse_errors(letters):
    """Unknown names, zero powers and malformed letters are rejected."""
    with pytest.raises(PresentationParseError):
        free(2).parse_word(letters)
