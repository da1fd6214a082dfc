"""Exception types raised by the exact series machinery."""


class QShelfError(Exception):
    """Base class for all errors raised by this package."""


class ZeroSeries(QShelfError):
    """The series is zero on its whole precision window, so it has no inverse."""


class LowestCoefficientNotUnit(QShelfError):
    """The lowest nonzero coefficient is not +-1, so the inverse would not
    have integer coefficients."""


class NegativeExponentResidue(QShelfError):
    """A nonzero coefficient survives at a negative exponent where an ordinary
    power series was required.  Signals an inexact division: either the input
    is corrupted or a recursion was applied outside its domain."""

    def __init__(self, exponent, coefficient):
        super().__init__(f"nonzero coefficient {coefficient} at exponent {exponent}")
        self.exponent = exponent
        self.coefficient = coefficient


class InsufficientPrecision(QShelfError):
    """An operation asked for coefficients beyond the known window."""


class DivergentProduct(QShelfError):
    """An infinite product has unboundedly many factors touching the window."""


class StabilizationFailure(QShelfError):
    """The final two iterates of a stabilizing limit disagree on the window.
    The limit provably stabilizes, so this indicates an implementation bug."""


class UnsupportedKind(QShelfError):
    """Unknown matrix kind or family."""


class UsageError(QShelfError):
    """Invalid CLI configuration (exit code 2)."""
