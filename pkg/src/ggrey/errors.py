"""Exception hierarchy shared by all modules."""


class GGreyError(Exception):
    """Base class for package errors."""


class DomainError(GGreyError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class AccuracyError(GGreyError, ArithmeticError):
    """A series or quadrature did not reach the requested accuracy.

    ``partial`` carries the best value available when the computation gave up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NumericalError(GGreyError, ArithmeticError):
    """Ill-conditioned linear algebra (indefinite covariance, singular Hankel matrix)."""


class UsageError(GGreyError, ValueError):
    """Unknown selector or malformed request."""
