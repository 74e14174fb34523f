"""Shared algebras for resonance tests."""

import pytest

from grlie.services.cohomology.algebra import beer_vP_plus, exterior_algebra, free_algebra


@pytest.fixture
def torus():
    """Z^2: one product e1 e2."""
    return exterior_algebra(2)


@pytest.fixture
def free2():
    return free_algebra(2)


@pytest.fixture
def vp3plus():
    """vP_3^+: b1 = 3, b2 = 1, every product of distinct generators equal."""
    return beer_vP_plus(3)
