"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an input lies outside an operation's documented domain.

    Covers non-finite numbers handed to the evaluation API, points outside
    the sector a routine requires, reversed integration intervals, and
    malformed sampling plans.
    """


class AccuracyError(ArithmeticError):
    """Raised when a requested accuracy cannot be delivered.

    Carries the best value obtained so far (``value``, possibly ``None``
    when no value is representable at all, e.g. exponent overflow) and the
    achieved error estimate (``err_estimate``).
    """

    def __init__(self, message: str, value=None, err_estimate: float = float("inf")):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate
