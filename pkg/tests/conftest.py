"""
Pytest configuration and fixtures.
"""

import pytest


def pytest_addoption(parser):
    """Add command line options."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run long computations marked slow"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --run-slow is given."""
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
