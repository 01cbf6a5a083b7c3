from typing import Dict, Optional

from .constants import EXIT_DATA, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE
from .namespace import Status


class PolyakLabException(Exception):
    """Base exception for polyak-lab errors."""
    code: str = "internal"
    exit_code: int = EXIT_FAIL


class DiagramValidationException(PolyakLabException):
    code = "diagram"
    exit_code = EXIT_DATA

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        super().__init__(message)
        self.index = index


class FlavorMismatchException(PolyakLabException):
    code = "flavor"
    exit_code = EXIT_DATA


class GaussCodeSyntaxException(PolyakLabException):
    code = "syntax"
    exit_code = EXIT_DATA

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class GaussCodeSemanticException(PolyakLabException):
    code = "gauss-code"
    exit_code = EXIT_DATA


class SchemaViolationException(PolyakLabException):
    code = "schema"
    exit_code = EXIT_DATA

    def __init__(self, message: str, pointer: str) -> None:
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


class ResourceLimitException(PolyakLabException):
    code = "ceiling"
    exit_code = EXIT_USAGE

    def __init__(self, what: str, requested: int, ceiling: int) -> None:
        super().__init__(f"{what}: order {requested} exceeds the configured ceiling {ceiling}")
        self.requested = requested
        self.ceiling = ceiling


class MovePreconditionException(PolyakLabException):
    code = "move"
    exit_code = EXIT_DATA

    def __init__(self, pattern: str, detail: str) -> None:
        super().__init__(f"move not applicable, pattern '{pattern}' failed: {detail}")
        self.pattern = pattern


class ConventionMismatchException(PolyakLabException):
    code = "convention"
    exit_code = EXIT_FAIL

    def __init__(self, message: str, instance: str) -> None:
        super().__init__(f"{message}; instance: {instance}")
        self.instance = instance


class ConfigurationException(PolyakLabException):
    code = "config"
    exit_code = EXIT_USAGE


class UsageException(PolyakLabException):
    code = "usage"
    exit_code = EXIT_USAGE


STATUS_EXIT_MAP: Dict[Status, int] = {
    Status.PASS: EXIT_OK,
    Status.FAIL: EXIT_FAIL,
    Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def exit_code_for(error: BaseException) -> int:
    """
    Map an exception to the CLI exit code.

    Args:
        error (BaseException): The raised exception.

    Returns:
        int: The exit code, EXIT_FAIL for anything outside the hierarchy.
    """
    if isinstance(error, PolyakLabException):
        return error.exit_code
    return EXIT_FAIL


def error_code_for(error: BaseException) -> str:
    if isinstance(error, PolyakLabException):
        return error.code
    return PolyakLabException.code


def exit_code_for_status(status: Status) -> int:
    return STATUS_EXIT_MAP[status]
