"""Tests for the JSON log formatter."""

import json
import logging

from grlie.logging.context import set_run_id, set_logging_context
from grlie.logging.formatters import JSONFormatter


def _record(message="computed layer", **extra):
    record = logging.LogRecord("grlie.test", logging.INFO, __file__, 1, message, None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_formatter_base_fields():
    """Every record carries timestamp, level, service, message and run id."""
    set_run_id("rid-1")
    data = json.loads(JSONFormatter(service="grlie").format(_record()))
    assert data["level"] == "INFO"
    assert data["service"] == "grlie"
    assert data["message"] == "computed layer"
    assert data["run_id"] == "rid-1"
    assert data["logger"] == "grlie.test"
    assert "timestamp" in data


def test_formatter_includes_context_and_extra():
    """Context values and extra fields are merged into the record."""
    set_logging_context(command="chen-ranks")
    data = json.loads(JSONFormatter().format(_record(degree=3, dims=[9, 34])))
    assert data["command"] == "chen-ranks"
    assert data["degree"] == 3
    assert data["dims"] == [9, 34]


def test_formatter_serializes_unknown_types():
    """Values that JSON cannot encode are rendered with str."""
    from fractions import Fraction

    data = json.loads(JSONFormatter().format(_record(value=Fraction(1, 3))))
    assert data["value"] == "1/3"


def test_formatter_exception():
    """Exception text is attached."""
    try:
        raise ValueError("bad rank")
    except ValueError:
        import sys
        record = logging.LogRecord("grlie.test", logging.ERROR, __file__, 1, "failed", None, sys.exc_info())
    data = json.loads(JSONFormatter().format(record))
    assert "ValueError: bad rank" in data["exception"]
