"""
Tests for configuration management.
"""

import pytest
from pydantic import ValidationError

from grlie.config import Settings

def test_settings_defaults():
    """Test that settings have correct default values."""
    settings = Settings(_env_file=None)

    assert settings.PROJECT_NAME == "grlie"
    assert settings.ENVIRONMENT == "development"
    assert settings.LOG_LEVEL == "WARNING"

    assert settings.GRLIE_THREADS == 1
    assert settings.GRLIE_SEED == 0
    assert settings.GRLIE_PRIMES == 2
    assert settings.GRLIE_PRIME_RETRIES == 3
    assert settings.GRLIE_HALL_BUDGET == 250_000
    assert settings.GRLIE_MODULE_BUDGET == 500_000
    assert settings.GRLIE_DEFAULT_TRUNCATION is None
    assert settings.GRLIE_SAMPLE_RANGE == 100

def test_settings_from_env(monkeypatch):
    """Test that settings are loaded from environment variables."""
    monkeypatch.setenv("GRLIE_THREADS", "4")
    monkeypatch.setenv("GRLIE_SEED", "12345")
    monkeypatch.setenv("GRLIE_DEFAULT_TRUNCATION", "6")
    monkeypatch.setenv("LOG_LEVEL", "debug")

    settings = Settings(_env_file=None)

    assert settings.GRLIE_THREADS == 4
    assert settings.GRLIE_SEED == 12345
    assert settings.GRLIE_DEFAULT_TRUNCATION == 6
    assert settings.LOG_LEVEL == "DEBUG"

def test_service_configs():
    """Test the per-service keyword dicts."""
    settings = Settings(_env_file=None, GRLIE_PRIMES=3, GRLIE_SEED=7, GRLIE_THREADS=2)

    assert settings.get_service_config("numeric") == {"primes": 3, "retries": 3, "seed": 7, "workers": 2}
    assert settings.get_service_config("lie") == {"budget": 250_000}
    assert settings.get_service_config("alexander") == {"budget": 500_000}
    assert settings.get_service_config("resonance") == {"sample_range": 100, "seed": 7}

    # Unknown services get an empty dict
    assert not settings.get_service_config("vector_storage")

def test_truncation_override_in_service_config():
    """Test that the truncation override appears only when set."""
    settings = Settings(_env_file=None, GRLIE_DEFAULT_TRUNCATION=5)
    assert settings.get_service_config("alexander")["truncation"] == 5

def test_settings_validation():
    """Test that invalid values are rejected."""
    with pytest.raises(ValidationError):
        Settings(_env_file=None, LOG_LEVEL="VERBOSE")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, GRLIE_THREADS=0)
    with pytest.raises(ValidationError):
        Settings(_env_file=None, GRLIE_PRIMES=0)
    with pytest.raises(ValidationError):
        Settings(_env_file=None, GRLIE_SEED=-1)
    with pytest.raises(ValidationError):
        Settings(_env_file=None, GRLIE_SEED=2 ** 64)

def test_extra_settings_allowed():
    """Unknown keys are kept rather than rejected."""
    settings = Settings(_env_file=None, OTHER_VAR="test")
    assert settings.OTHER_VAR == "test"
