"""
Exception handling for the command-line interface.

This module maps library exceptions to process exit codes and formats them
according to the ErrorResponse model, so that every failure produces a
single JSON line on stderr and a predictable exit status.
"""

import logging
import sys
from typing import TextIO, Tuple

from pydantic import ValidationError

from grlie.schemas.responses import ErrorResponse
from grlie.services.alexander.exceptions import AlexanderError
from grlie.services.cohomology.exceptions import CohomologyError, UnknownAlgebraError
from grlie.services.combinatorics.exceptions import CombinatoricsError
from grlie.services.exceptions import BudgetExceededError
from grlie.services.groebner.exceptions import GroebnerError
from grlie.services.groups.exceptions import GroupError, PresentationParseError, UnknownFamilyError
from grlie.services.lie.exceptions import LieError
from grlie.services.numeric.exceptions import NumericError
from grlie.services.resonance.exceptions import ResonanceError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_COMPUTATION = 4

LIBRARY_ERRORS = (
    NumericError,
    CombinatoricsError,
    GroupError,
    CohomologyError,
    GroebnerError,
    LieError,
    AlexanderError,
    ResonanceError,
)


class CLIError(Exception):
    """Base class for command-line failures."""
    pass


class UsageError(CLIError):
    """Raised when options are missing or inconsistent for a subcommand."""
    pass


class VerifyFailedError(CLIError):
    """Raised when a verification run has a failing item."""
    pass


def classify(exc: BaseException) -> Tuple[int, ErrorResponse]:
    """
    Exit code and error body for an exception.

    Budget errors are checked first since they also derive from their
    service's base class.

    Args:
        exc: The exception raised by a subcommand

    Returns:
        (exit code, ErrorResponse)
    """
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET, ErrorResponse(detail=str(exc), code="RESOURCE_BUDGET")
    if isinstance(exc, PresentationParseError):
        return EXIT_PARSE, ErrorResponse(detail=str(exc), code="PARSE_ERROR")
    if isinstance(exc, (UnknownFamilyError, UnknownAlgebraError, UsageError)):
        return EXIT_PARSE, ErrorResponse(detail=str(exc), code="INVALID_ARGUMENT")
    if isinstance(exc, ValidationError):
        return EXIT_PARSE, ErrorResponse(detail="Validation error", code="VALIDATION_ERROR")
    if isinstance(exc, VerifyFailedError):
        return EXIT_VERIFY_FAILED, ErrorResponse(detail=str(exc), code="VERIFY_FAILED")
    if isinstance(exc, LIBRARY_ERRORS):
        return EXIT_COMPUTATION, ErrorResponse(detail=str(exc), code="COMPUTATION_ERROR")
    return EXIT_COMPUTATION, ErrorResponse(detail="An unexpected error occurred", code="INTERNAL_ERROR")


def handle_exception(exc: BaseException, stream: TextIO = None) -> int:
    """
    Report an exception on stderr and return the exit code.

    Args:
        exc: The exception raised by a subcommand
        stream: Where the ErrorResponse JSON goes (stderr by default)

    Returns:
        The process exit code
    """
    code, body = classify(exc)
    if body.code == "INTERNAL_ERROR":
        logger.exception("unexpected error", exc_info=exc)
    else:
        logger.error(body.detail, extra={"code": body.code, "exit_code": code})
    print(body.model_dump_json(), file=stream or sys.stderr)
    return code
