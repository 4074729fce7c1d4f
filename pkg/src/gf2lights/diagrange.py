"""Constructive diagonal-in-range solver for finite symmetric matrices.

For every symmetric matrix A over Z2 the diagonal vector d lies in the
range of A, so A x = d always has a solution.  This module produces the
canonical one and exposes the certifying check.  The existence argument
(every kernel vector is orthogonal to d, because z^T A z = d . z for
symmetric A) lives in the test suite as invariants; the solver itself is
plain elimination.
"""

from __future__ import annotations

from .errors import InternalTheoremViolation, NotSymmetricError
from .gf2core import Gf2Matrix, Gf2Vector, matvec, solve

__all__ = ["diagonal", "solve_diagonal", "certify_diagonal"]


def diagonal(a: Gf2Matrix) -> Gf2Vector:
    """The diagonal vector d, entry i = a_ii.  A must be square."""
    return a.diagonal()


def solve_diagonal(a: Gf2Matrix) -> Gf2Vector:
    """The canonical x with A x = diagonal(A), for symmetric A.

    Solvability is guaranteed for symmetric inputs; the result is the
    elimination solution with all free variables zero, so repeated calls
    return identical bit patterns.

    Raises NotSymmetricError if A is not symmetric, and
    InternalTheoremViolation if the internal solve reports infeasible,
    which no input reaching it can trigger.
    """
    if not a.is_symmetric():
        raise NotSymmetricError(
            f"solve_diagonal requires a symmetric matrix, got {a.rows}x{a.cols}")
    result = solve(a, a.diagonal())
    if not result.feasible:
        raise InternalTheoremViolation(
            "diagonal not in range of a symmetric matrix")
    assert result.particular is not None
    return result.particular


def certify_diagonal(a: Gf2Matrix, x: Gf2Vector) -> bool:
    """True iff A x = diagonal(A).  Checks any candidate, canonical or not."""
    return matvec(a, x) == a.diagonal()
