"""
Fixtures for Alexander invariant tests.
"""

import pytest

from grlie.services.numeric.polynomials import poly_ring


@pytest.fixture
def ring2():
    """QQ[x1, x2]."""
    return poly_ring(2)


@pytest.fixture
def elimination():
    """Fixed elimination options so results do not depend on the environment."""
    return {"seed": 11, "primes": 2}
