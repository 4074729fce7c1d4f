"""gf2lights: exact Z2 linear algebra and Lights Out solving.

The package is layered: gf2core (bit-packed vectors/matrices and
elimination), diagrange (diagonal-in-range solver for finite symmetric
matrices), rowfinite (infinite row-finite matrices, cut points, block
windows), transfer (prefix solution sets, exact via a transfer
automaton for periodic specs), lightsout (the game layer), and gateway
(CLI and HTTP service).

Hot kernels run on a compiled extension when available; set
GF2LIGHTS_BACKEND=pure or =compiled to force a backend.
"""

from ._kernels import BACKEND
from .errors import (
    CellTooLargeError,
    DimensionMismatchError,
    Gf2LightsError,
    InternalTheoremViolation,
    NotSymmetricError,
    PrefixTooLongError,
    SymmetryViolationError,
    UnsolvableBoardError,
    UnsolvableError,
)
from .gf2core import (
    AffineSolutionSet,
    Gf2Matrix,
    Gf2Vector,
    column_cut,
    format_matrix_text,
    matvec,
    nullspace,
    parse_matrix_text,
    quadratic_form,
    random_matrix,
    random_symmetric_matrix,
    rank,
    solve,
)
from .diagrange import certify_diagonal, diagonal, solve_diagonal

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "Gf2LightsError",
    "DimensionMismatchError",
    "NotSymmetricError",
    "SymmetryViolationError",
    "InternalTheoremViolation",
    "PrefixTooLongError",
    "CellTooLargeError",
    "UnsolvableError",
    "UnsolvableBoardError",
    "Gf2Vector",
    "Gf2Matrix",
    "AffineSolutionSet",
    "matvec",
    "solve",
    "nullspace",
    "rank",
    "quadratic_form",
    "column_cut",
    "parse_matrix_text",
    "format_matrix_text",
    "random_matrix",
    "random_symmetric_matrix",
    "diagonal",
    "solve_diagonal",
    "certify_diagonal",
]
