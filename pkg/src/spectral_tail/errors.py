"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class AnalyticityError(DomainError):
    """The requested ellipse is not inside the function's region of analyticity."""


class PrecisionError(ArithmeticError):
    """A floating-point evaluation cannot meet its accuracy target.

    ``condition`` carries the estimated cancellation magnitude
    (sum of absolute terms divided by the absolute sum).
    """

    def __init__(self, message, condition=float("inf")):
        super().__init__(message)
        self.condition = condition


class NumericalError(RuntimeError):
    """An iterative or self-checking numerical procedure failed to converge."""


class PrecisionWarning(UserWarning):
    """Emitted when a result is returned with a large error estimate."""
