"""Exception types shared across the package."""

from __future__ import annotations


class Gf2LightsError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(Gf2LightsError, ValueError):
    """Operands have incompatible shapes or lengths."""


class NotSymmetricError(Gf2LightsError, ValueError):
    """A square symmetric matrix was required and the check failed."""


class SymmetryViolationError(Gf2LightsError, ValueError):
    """A window extracted from a row-finite matrix failed its symmetry spot-check."""


class InternalTheoremViolation(Gf2LightsError, RuntimeError):
    """The diagonal-in-range guarantee failed for a symmetric matrix.

    This cannot happen for a correctly built symmetric system; seeing it
    means a bug in the caller or in the elimination engine, never a
    legitimately unsolvable instance.
    """


class PrefixTooLongError(Gf2LightsError, ValueError):
    """A requested prefix length exceeds the variable range the query supports."""


class CellTooLargeError(Gf2LightsError, ValueError):
    """A periodic cell exceeds the configured automaton state bound."""


class UnsolvableError(Gf2LightsError):
    """A requested system has no solution (only possible off the diagonal target)."""


class UnsolvableBoardError(UnsolvableError):
    """A board target is unreachable; carries an orthogonality witness.

    ``witness`` is a vector z with z^T A = 0 and z . b = 1 for the board's
    influence matrix A and difference vector b, certifying infeasibility.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
