"""Exception hierarchy shared by all kiricap modules.

Every error carries the process exit code the CLI maps it to.
"""

from typing import Optional


class KiricapError(Exception):
    """Base class for kiricap errors"""

    exit_code: int = 2


class InvalidParamsError(KiricapError, ValueError):
    """Raised when parameters violate a documented invariant"""

    exit_code = 2


class OutOfRangeError(InvalidParamsError):
    """Raised when an input lies outside an operation's validated domain"""


class InvalidProgramError(InvalidParamsError):
    """Raised when a motion program cannot be executed"""


class DegenerateDataError(KiricapError):
    """Raised when a fit has no information to work with"""

    exit_code = 2


class EmptyInputError(KiricapError):
    """Raised when an operation needs at least one value"""

    exit_code = 2


class ParseError(KiricapError):
    """Raised when an input file cannot be parsed"""

    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonMonotoneTimeError(ParseError):
    """Raised when a time column does not strictly increase"""


class ExportIOError(KiricapError, OSError):
    """Raised when an output cannot be written"""

    exit_code = 3


class UndercutError(KiricapError):
    """Raised when the roller radius exceeds the pitch curve's radius of curvature"""

    exit_code = 4

    def __init__(self, min_radius: float, roller_radius: float):
        self.min_radius = min_radius
        self.roller_radius = roller_radius
        super().__init__(
            f"undercut: minimum pitch radius of curvature {min_radius:.5f} mm "
            f"< roller radius {roller_radius:.5f} mm"
        )


class ConstraintViolationError(KiricapError):
    """Raised when a design check fails one or more bounds"""

    exit_code = 4


class InfeasibleConfigError(KiricapError):
    """Raised when a simulation leaves the validated model domain"""

    exit_code = 5
