"""Exception hierarchy shared by every evaluation routine."""

from __future__ import annotations


class LerchForgeError(Exception):
    """Base class for all library errors."""


class ValidationError(LerchForgeError, ValueError):
    """An argument is outside its documented range."""


class DomainError(LerchForgeError, ValueError):
    """The point lies outside the region where the function is evaluated."""


class PoleError(DomainError):
    """The argument is too close to a pole.

    ``pole`` is the location of the offending pole (an integer ``k`` for the
    zeta families, a nonpositive integer for the gamma function).
    """

    def __init__(self, message: str, pole: int):
        super().__init__(message)
        self.pole = pole


class ConvergenceError(LerchForgeError, ArithmeticError):
    """The requested tolerance could not be reached.

    ``estimate`` carries the best error estimate that was achieved.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


class GammaOverflowError(DomainError, OverflowError):
    """exp() of the log-value would overflow; ``log_value`` is kept."""

    def __init__(self, message: str, log_value: complex):
        super().__init__(message)
        self.log_value = log_value
