"""Exception hierarchy shared by all czorb modules.

Each class maps to one CLI exit code, so library errors translate to
process status without string matching.
"""


class CzorbError(Exception):
    """Base class for all czorb errors."""

    exit_code = 2


class DomainError(CzorbError, ValueError):
    """Input violates a precondition (non-positive weight, empty list, ...)."""

    exit_code = 2


class NonCoprimeError(DomainError):
    """Weight vector entries share a common factor; carries the offending gcd."""

    def __init__(self, gcd: int, weights=None):
        self.gcd = gcd
        self.weights = tuple(weights) if weights is not None else None
        detail = f" in {self.weights}" if self.weights else ""
        super().__init__(f"weights{detail} share a common factor: gcd={gcd}")


class UncoveredCaseError(CzorbError):
    """The requested computation falls outside the covered formula branches.

    Raised instead of extrapolating; pass allow_extrapolation=True where an
    operation supports a labeled extrapolation.
    """

    exit_code = 3


class ConvergenceError(CzorbError):
    """A numeric routine failed to reach the requested resolution."""

    exit_code = 4

    def __init__(self, message: str, achieved_error: float | None = None):
        self.achieved_error = achieved_error
        super().__init__(message)
