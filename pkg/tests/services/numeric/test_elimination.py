"""Tests for modular and rational elimination."""

from fractions import Fraction

import pytest

from grlie.services.numeric.elimination import (
    PRIME_HIGH,
    PRIME_LOW,
    EchelonBasis,
    certified_elimination,
    certified_rank,
    eliminate,
    prime_pool,
)
from grlie.services.numeric.exceptions import PrimeDisagreementError
from grlie.services.numeric.sampling import make_rng


@pytest.fixture
def rows():
    # third row is the sum of the first two
    return [
        {0: 1, 2: 2},
        {1: Fraction(1, 2), 2: -1},
        {0: 1, 1: Fraction(1, 2), 2: 1},
        {3: 5},
    ]


def test_echelon_basis_membership(rows):
    """Dependent rows reduce to zero."""
    basis = EchelonBasis()
    assert basis.add(rows[0])
    assert basis.add(rows[1])
    assert not basis.add(rows[2])
    assert basis.reduce({2: 7}) == {2: Fraction(7)}
    assert basis.rank == 2
    assert basis.pivot_columns() == (0, 1)


def test_echelon_basis_modular_rejects_bad_denominator():
    """A prime dividing a denominator cannot reduce the row."""
    with pytest.raises(PrimeDisagreementError):
        EchelonBasis(modulus=7).add({0: Fraction(1, 7)})


def test_eliminate_rational_and_modular_agree(rows):
    """Rational and modular passes select the same rows."""
    exact = eliminate(rows)
    modular = eliminate(rows, 1_000_000_007)
    assert exact.method == "rational"
    assert modular.method == "modular"
    assert exact.rank == modular.rank == 3
    assert exact.independent_rows == modular.independent_rows == (0, 1, 3)
    assert exact.pivot_columns == modular.pivot_columns == (0, 1, 3)


def _random_rows(rng):
    nrows, ncols = rng.randint(3, 7), rng.randint(3, 8)
    rows = [{c: rng.randint(-10, 10) for c in range(ncols)} for _ in range(nrows)]
    # one dependent row so the rank is not always full
    rows.append({c: rows[0][c] - 2 * rows[1][c] for c in range(ncols)})
    return rows


@pytest.mark.parametrize("trial", range(15))
def test_random_matrices_have_the_same_rank_over_qq_and_two_primes(trial):
    """Entries in [-10, 10]; two random 31-bit primes reproduce the rational elimination."""
    rng = make_rng(trial, "modular-consistency")
    rows = _random_rows(rng)
    exact = eliminate(rows)
    primes = prime_pool(trial, 2)
    assert len(set(primes)) == 2
    for p in primes:
        modular = eliminate(rows, p)
        assert modular.rank == exact.rank
        assert modular.pivot_columns == exact.pivot_columns
        assert modular.independent_rows == exact.independent_rows
    assert exact.rank < len(rows)
    certified = certified_elimination(rows, primes=2, seed=trial)
    assert certified.method == "modular"
    assert certified.rank == exact.rank


def test_prime_pool_is_deterministic():
    """Same seed and attempt give the same distinct 31-bit primes."""
    pool = prime_pool(42, 3)
    assert pool == prime_pool(42, 3)
    assert len(set(pool)) == 3
    assert all(PRIME_LOW <= p < PRIME_HIGH for p in pool)
    assert prime_pool(42, 3, attempt=2) != pool


def test_certified_elimination(rows):
    """Consensus over several primes."""
    result = certified_elimination(rows, primes=3, seed=7)
    assert result.rank == 3
    assert result.method == "modular"
    assert len(result.primes) == 3
    assert certified_rank(rows, primes=2, seed=7) == 3


def test_certified_elimination_falls_back_to_rationals(monkeypatch, rows):
    """Persistent prime disagreement ends in an exact rational pass."""
    import grlie.services.numeric.elimination as elimination

    def disagree(rows, primes, workers):
        raise PrimeDisagreementError("forced")

    monkeypatch.setattr(elimination, "_modular_consensus", disagree)
    result = certified_elimination(rows, primes=2, retries=2)
    assert result.method == "rational"
    assert result.rank == 3


def test_empty_rows():
    """No rows means rank zero."""
    assert eliminate([]).rank == 0
    assert certified_rank([]) == 0
