"""Exception hierarchy shared by the core modules, the agents and the CLI."""

from __future__ import annotations


class MatroidFrontierError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class InputError(MatroidFrontierError, ValueError):
    """A caller passed a value outside the operation's domain."""


class InstanceParseError(InputError):
    """An instance file could not be read as JSON or holds malformed rationals."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InstanceValidationError(InputError):
    """An instance file parsed but describes an invalid problem."""


class UndefinedSlopeError(InputError):
    """Two points share their first objective value, so no slope exists."""


class ResourceCapError(MatroidFrontierError, RuntimeError):
    """Exhaustive enumeration would exceed the configured cap."""

    exit_code = 2


class SolverLogicError(MatroidFrontierError, RuntimeError):
    """An internal contract between solver steps was broken."""


class VerificationError(MatroidFrontierError, RuntimeError):
    """A solver result disagrees with the brute-force oracle."""

    exit_code = 3

    def __init__(self, violations: list[str]) -> None:
        self.violations = violations
        super().__init__(
            f"{len(violations)} verification violation(s): " + "; ".join(violations)
        )
