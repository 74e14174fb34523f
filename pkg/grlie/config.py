"""
Configuration management module.

This module loads engine settings from the environment (and an optional
.env file) and exposes them through a single typed Settings object used by
the CLI, the logging setup and the computational services.
"""

from typing import Any, Dict, Optional
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator

# Load environment variables from .env file
load_dotenv()

class Settings(BaseSettings):
    """
    Engine settings using Pydantic for type-safe configuration.

    Values come from environment variables when present and fall back to the
    defaults below. Field names are the environment variable names.
    """

    PROJECT_NAME: str = "grlie"
    VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"  # development, production

    # Logging Settings
    LOG_LEVEL: str = "WARNING"  # DEBUG, INFO, WARNING, ERROR, CRITICAL
    LOG_PATH: Optional[str] = None
    LOG_RETENTION_DAYS: int = 30

    # Engine Settings
    GRLIE_THREADS: int = 1
    GRLIE_SEED: int = 0
    GRLIE_PRIMES: int = 2
    GRLIE_PRIME_RETRIES: int = 3
    GRLIE_HALL_BUDGET: int = 250_000
    GRLIE_MODULE_BUDGET: int = 500_000
    GRLIE_DEFAULT_TRUNCATION: Optional[int] = None
    GRLIE_SAMPLE_RANGE: int = 100

    @field_validator('LOG_LEVEL', mode='before')
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level is one of the allowed values."""
        allowed_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in allowed_levels:
            raise ValueError(f"Log level must be one of {allowed_levels}")
        return v.upper()

    @field_validator('GRLIE_THREADS', 'GRLIE_PRIMES', 'GRLIE_PRIME_RETRIES', 'GRLIE_SAMPLE_RANGE')
    @classmethod
    def validate_positive(cls, v):
        """Counts and ranges must be at least 1."""
        if v < 1:
            raise ValueError("value must be >= 1")
        return v

    @field_validator('GRLIE_SEED')
    @classmethod
    def validate_seed(cls, v):
        """Seeds are unsigned 64-bit values."""
        if not 0 <= v < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned value")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="allow"
    )

    def get_service_config(self, service: str) -> Dict[str, Any]:
        """Get keyword configuration for a specific engine service."""
        config: Dict[str, Any] = {}

        if service == "numeric":
            config["primes"] = self.GRLIE_PRIMES
            config["retries"] = self.GRLIE_PRIME_RETRIES
            config["seed"] = self.GRLIE_SEED
            config["workers"] = self.GRLIE_THREADS

        elif service == "lie":
            config["budget"] = self.GRLIE_HALL_BUDGET

        elif service == "alexander":
            config["budget"] = self.GRLIE_MODULE_BUDGET
            if self.GRLIE_DEFAULT_TRUNCATION is not None:
                config["truncation"] = self.GRLIE_DEFAULT_TRUNCATION

        elif service == "resonance":
            config["sample_range"] = self.GRLIE_SAMPLE_RANGE
            config["seed"] = self.GRLIE_SEED

        return config

# Create a single instance of Settings that will be imported throughout the package
settings = Settings(_env_file=None)  # Don't load .env file by default
