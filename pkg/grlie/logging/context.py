"""
Context management for logging.

Every CLI invocation gets a run id so that the progress records of one
computation can be grouped, and a small context dict (command, family,
truncation degree) that is attached to every record.

Usage:
    set_run_id()
    set_logging_context(command="chen-ranks", family="vP3")
    logger.info("degree done", extra={"degree": 4})
    # {"message": "degree done", "run_id": "...", "command": "chen-ranks", "degree": 4, ...}
    clear_logging_context()
"""

import contextvars
import uuid
from typing import Dict, Optional

run_id: contextvars.ContextVar[str] = contextvars.ContextVar("run_id")

logging_context: contextvars.ContextVar[Dict] = contextvars.ContextVar(
    "logging_context", default={}
)


def get_run_id() -> str:
    """
    Get the current run id.

    Returns:
        Current run id, or a new one if none exists
    """
    try:
        return run_id.get()
    except LookupError:
        new_id = str(uuid.uuid4())
        run_id.set(new_id)
        return new_id


def set_run_id(rid: Optional[str] = None) -> str:
    """
    Set the run id.

    Args:
        rid: Optional run id to set. If None, generates a new one.

    Returns:
        The run id now in effect
    """
    if rid is None:
        rid = str(uuid.uuid4())
    run_id.set(rid)
    return rid


def get_logging_context() -> Dict:
    """Return the current logging context."""
    return logging_context.get()


def set_logging_context(**kwargs) -> None:
    """
    Add key-value pairs to the logging context.

    Args:
        **kwargs: Key-value pairs to add to the logging context
    """
    current_context = dict(logging_context.get())
    current_context.update(kwargs)
    logging_context.set(current_context)


def clear_logging_context() -> None:
    """Clear all logging context information."""
    logging_context.set({})
