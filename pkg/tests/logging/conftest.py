"""Shared fixtures for logging tests."""

import logging
import tempfile
from typing import Generator

import pytest
from grlie.config import Settings
from grlie.logging import clear_logging_context, get_logger, set_run_id, setup_logging


@pytest.fixture
def temp_log_dir() -> Generator[str, None, None]:
    """Directory for the production log file."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield temp_dir


@pytest.fixture
def settings(temp_log_dir: str) -> Settings:
    """Development settings with DEBUG records on stderr."""
    return Settings(
        _env_file=None,
        ENVIRONMENT="development",
        LOG_LEVEL="DEBUG",
        LOG_PATH=temp_log_dir,
        LOG_RETENTION_DAYS=1
    )


@pytest.fixture
def logger(settings: Settings) -> logging.Logger:
    """Engine logger with JSON output configured."""
    setup_logging(settings)
    return get_logger("grlie.services.alexander.hilbert")


@pytest.fixture(autouse=True)
def clean_logging_context():
    """Fresh run id and empty context around each test."""
    clear_logging_context()
    set_run_id("test-run")
    yield
    clear_logging_context()
