"""
Central logging module for the engine.

This module provides a centralized logging interface.
"""

import logging
from grlie.logging.config import setup_logging
from grlie.logging.context import (
    get_run_id,
    set_run_id,
    get_logging_context,
    set_logging_context,
    clear_logging_context
)

__all__ = [
    "setup_logging",
    "get_logger",
    "get_run_id",
    "set_run_id",
    "get_logging_context",
    "set_logging_context",
    "clear_logging_context"
]

def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the given name.

    Args:
        name: Name of the logger (typically __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
