"""Exception hierarchy shared by every evaluator."""


class QEulerError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QEulerError, ValueError):
    """An argument lies outside the domain of the requested function."""


class RepresentabilityError(DomainError):
    """A power of q cannot be written as an integer power of t = q^(1/D)."""


class BranchCutError(DomainError):
    """A complex power would be taken on the principal-log branch cut."""


class PoleError(DomainError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class BackendMismatchError(QEulerError, TypeError):
    """Float and exact scalars were mixed in one operation."""


class ConvergenceError(QEulerError, ArithmeticError):
    """A truncated series did not meet its tail bound within max_terms."""
