"""
Fixtures for group presentation tests.
"""

import pytest

from grlie.services.groups.presentation import Word


@pytest.fixture
def x():
    """Generator words x(0), x(1), ..."""
    return Word.generator


@pytest.fixture
def commutator(x):
    """[x1, x2] in two generators."""
    return Word.commutator(x(0), x(1))
