"""Exceptions raised by harmonic_kernels.

Every exception derives from both HarmonicKernelsError and the builtin it
refines, so callers may catch either.
"""


class HarmonicKernelsError(Exception):
    pass


class DomainError(HarmonicKernelsError, ValueError):
    """An argument lies outside the domain an operation is certified on."""


class PoleError(HarmonicKernelsError, ZeroDivisionError):
    """An argument sits on (or within tolerance of) a pole."""


class ConvergenceError(HarmonicKernelsError, RuntimeError):
    """A series or iteration ran out of budget before meeting its bound."""


class NonConvergence(ConvergenceError):
    """Quadrature exhausted its level budget."""

    def __init__(self, message, result=None):
        super(NonConvergence, self).__init__(message)
        self.result = result


class UsageError(HarmonicKernelsError, ValueError):
    """Bad command line or configuration input."""


# Errors that indicate a numerical failure rather than a bad request. The
# builtin ArithmeticError family covers overflow in cmath and float math.
NUMERICAL_ERRORS = (ConvergenceError, ArithmeticError)
NUMERICAL_ERROR_NAMES = frozenset(cls.__name__ for cls in (
    PoleError, ConvergenceError, NonConvergence,
    ArithmeticError, OverflowError, ZeroDivisionError, FloatingPointError))
