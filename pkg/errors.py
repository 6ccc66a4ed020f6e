class LatticeWalksError(Exception):
    """
    Base class for every error raised by the library.
    The command layer turns these into {"error": "<message>"} responses.
    """


class InvalidParameter(LatticeWalksError, ValueError):
    """A parameter is outside the range an operation accepts."""


class DomainError(InvalidParameter):
    """A modulus or argument lies outside the domain of a special function."""


class ResourceLimitExceeded(LatticeWalksError):
    """A finite truncation would grow beyond the configured vertex budget."""

    def __init__(self, message: str, budget: int, reached: int):
        super().__init__(message)
        self.budget = budget
        self.reached = reached


class NumericalFailure(LatticeWalksError, ArithmeticError):
    """
    A numerical routine did not reach its tolerance.
    `details` carries diagnostics such as the residual or a condition estimate.
    """

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details
