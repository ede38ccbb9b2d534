"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class FanFormatError(ToricError):
    """Malformed fan file text. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FanValidationError(ToricError):
    """Structurally invalid fan (bad rays, bad cones, fan condition failure)."""


class NotAFaceError(ToricError):
    """A cone argument is not a face of the given fan."""


class DivisorError(ToricError):
    """Divisor does not match its fan, or an operand pair mismatches."""


class RecursionBudgetExceeded(ToricError):
    """chi_recursive exceeded its node budget (see TORIC_RECURSION_BUDGET)."""


class ScanRegionError(ToricError):
    """The cohomology scan region failed its shell stability check."""
