"""Tests for logging context management."""

import contextvars
import threading
import time
import uuid

from grlie.logging.context import (
    get_run_id,
    set_run_id,
    get_logging_context,
    set_logging_context,
    clear_logging_context
)


def test_run_id_generation():
    """Test automatic generation of run ids."""
    fresh = contextvars.Context()
    rid = fresh.run(get_run_id)
    assert isinstance(rid, str)
    uuid.UUID(rid)
    assert fresh.run(get_run_id) == rid


def test_run_id_setting():
    """Test setting specific run ids."""
    set_run_id("test-run-id")
    assert get_run_id() == "test-run-id"

    new_id = set_run_id(None)
    assert new_id != "test-run-id"
    assert get_run_id() == new_id


def test_logging_context_empty():
    """Test initial empty logging context."""
    context = get_logging_context()
    assert isinstance(context, dict)
    assert len(context) == 0


def test_logging_context_setting():
    """Test setting and updating logging context."""
    set_logging_context(command="chen-ranks", family="vP3")
    context = get_logging_context()
    assert context["command"] == "chen-ranks"
    assert context["family"] == "vP3"

    set_logging_context(family="Pbar4", degree=4)
    context = get_logging_context()
    assert context["command"] == "chen-ranks"
    assert context["family"] == "Pbar4"
    assert context["degree"] == 4


def test_logging_context_clearing():
    """Test clearing logging context."""
    set_logging_context(command="verify")
    assert len(get_logging_context()) > 0

    clear_logging_context()
    assert len(get_logging_context()) == 0


def test_context_isolation():
    """Test that context is isolated between threads."""
    seen = {}

    def thread_function():
        set_run_id("thread-id")
        set_logging_context(item="thread")
        time.sleep(0.1)
        seen["run_id"] = get_run_id()
        seen["context"] = dict(get_logging_context())

    set_run_id("main-id")
    set_logging_context(item="main")

    thread = threading.Thread(target=thread_function)
    thread.start()
    thread.join()

    assert get_run_id() == "main-id"
    assert get_logging_context()["item"] == "main"
    assert seen == {"run_id": "thread-id", "context": {"item": "thread"}}
