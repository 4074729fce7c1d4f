"""Countably infinite symmetric matrices with finitely many ones per row.

A matrix is described by its row supports: ``support(i)`` returns the
sorted 1-based column indices of the ones in row i, for any i >= 1.
Support generators must be total and pure; results are cached, so
repeated window extraction and cut discovery stay cheap.

The module discovers the block-tridiagonal shape of such a matrix: cut
points k1 < k2 < ... after which the leading rows carry no further
entries, the diagonal D blocks between consecutive cuts, and the
rectangular B blocks coupling them.  Everything here is 1-based; the
finite windows handed back are ordinary 0-based Gf2Matrix values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import Gf2LightsError, SymmetryViolationError
from .gf2core import Gf2Matrix, Gf2Vector

PERIODIC_SPEC_FORMAT = "gf2lights/periodic-spec"
PERIODIC_SPEC_VERSION = 1

__all__ = [
    "RowFiniteMatrix",
    "PeriodicSpec",
    "BlockDecomposition",
    "cut_points",
    "window",
    "decompose",
    "check_symmetry_window",
    "identity_diagonal_matrix",
    "closed_path_matrix",
    "open_path_matrix",
    "ladder_matrix",
    "identity_spec",
    "closed_path_spec",
    "open_path_spec",
    "parse_periodic_spec_json",
    "format_periodic_spec_json",
]


class RowFiniteMatrix:
    """An infinite symmetric matrix given by a per-row support generator.

    ``kind`` is "explicit-banded" for hand-written generators and
    "periodic" for matrices induced by a PeriodicSpec; a periodic matrix
    keeps a reference to its spec so exact prefix machinery can reach it.
    """

    def __init__(self, support_fn: Callable[[int], Sequence[int]],
                 kind: str = "explicit-banded",
                 spec: "PeriodicSpec | None" = None):
        if kind not in ("explicit-banded", "periodic"):
            raise ValueError(f"unknown kind: {kind!r}")
        self._support_fn = support_fn
        self._cache: dict[int, tuple[int, ...]] = {}
        self.kind = kind
        self.spec = spec

    def support(self, i: int) -> tuple[int, ...]:
        """Sorted 1-based column indices of the ones in row i (i >= 1)."""
        if i < 1:
            raise IndexError(f"row index {i} must be >= 1")
        cached = self._cache.get(i)
        if cached is None:
            cols = tuple(sorted(set(self._support_fn(i))))
            if cols and cols[0] < 1:
                raise ValueError(f"support({i}) contains index < 1: {cols}")
            cached = self._cache[i] = cols
        return cached

    def entry(self, i: int, j: int) -> int:
        """a_ij for 1-based i, j."""
        return 1 if j in self.support(i) else 0

    def max_support(self, i: int) -> int:
        """Largest column index in row i, or 0 for an empty row."""
        sup = self.support(i)
        return sup[-1] if sup else 0


def window(m: RowFiniteMatrix, size: int) -> Gf2Matrix:
    """The leading size x size principal submatrix, read from row supports."""
    if size < 0:
        raise ValueError("window size must be >= 0")
    ints = []
    for i in range(1, size + 1):
        v = 0
        for j in m.support(i):
            if j <= size:
                v |= 1 << (j - 1)
        ints.append(v)
    return Gf2Matrix.from_row_ints(ints, size)


def check_symmetry_window(m: RowFiniteMatrix, size: int) -> bool:
    """True iff the leading window is symmetric: every in-window support
    entry has its mirror."""
    return window(m, size).is_symmetric()


def cut_points(m: RowFiniteMatrix, n: int, count: int) -> list[int]:
    """The minimal cut sequence k1 < k2 < ... < k_count for base size n.

    k_s is the least integer exceeding k_{s-1} (and 0 for s=1) such that
    every row i <= n + k_{s-1} has support inside [1, n + k_s].  Row
    finiteness makes each k_s a finite maximum.
    """
    if n < 1:
        raise ValueError("base size n must be >= 1")
    if count < 1:
        raise ValueError("cut count must be >= 1")
    cuts: list[int] = []
    prev = 0
    for _ in range(count):
        reach = 0
        for i in range(1, n + prev + 1):
            reach = max(reach, m.max_support(i))
        k = max(prev + 1, reach - n)
        cuts.append(k)
        prev = k
    return cuts


@dataclass(frozen=True)
class BlockDecomposition:
    """The block-tridiagonal picture of a leading window.

    Boundaries are n, n+k1, ..., n+k_m; ``diag_blocks[s]`` is the square
    block between boundaries s-1 and s (the first spans rows 1..n), and
    ``coupling_blocks[s]`` couples diag block s to diag block s+1.
    """

    n: int
    cuts: tuple[int, ...]
    diag_blocks: tuple[Gf2Matrix, ...]
    coupling_blocks: tuple[Gf2Matrix, ...]

    def boundaries(self) -> tuple[int, ...]:
        return (self.n, *(self.n + k for k in self.cuts))


def decompose(m: RowFiniteMatrix, n: int, count: int) -> BlockDecomposition:
    """Cut discovery plus block extraction, with symmetry and zero-block
    verification over the extracted range."""
    cuts = cut_points(m, n, count)
    total = n + cuts[-1]
    win = window(m, total)
    if not win.is_symmetric():
        raise SymmetryViolationError(
            f"leading {total}x{total} window is not symmetric")
    bounds = [0, n] + [n + k for k in cuts]
    for s in range(1, len(bounds) - 1):
        for i in range(1, bounds[s] + 1):
            if m.max_support(i) > bounds[s + 1]:
                raise Gf2LightsError(
                    f"zero-block property violated: row {i} reaches past "
                    f"column {bounds[s + 1]}")
    diag = tuple(win.submatrix(bounds[s], bounds[s + 1], bounds[s], bounds[s + 1])
                 for s in range(len(bounds) - 1))
    coupling = tuple(
        win.submatrix(bounds[s], bounds[s + 1], bounds[s + 1], bounds[s + 2])
        for s in range(len(bounds) - 2))
    return BlockDecomposition(n, tuple(cuts), diag, coupling)


def _validate_supports(supports: Iterable[Sequence[int]], bound: int,
                       what: str) -> tuple[tuple[int, ...], ...]:
    out = []
    for idx, sup in enumerate(supports, start=1):
        cols = tuple(sorted(set(int(j) for j in sup)))
        if cols and (cols[0] < 1 or cols[-1] > bound):
            raise ValueError(
                f"{what} row {idx} support {cols} leaves [1, {bound}]")
        out.append(cols)
    return tuple(out)


@dataclass(frozen=True)
class PeriodicSpec:
    """A finite description of an infinite symmetric row-finite matrix.

    Rows 1..preamble_size carry explicit supports, which may reach into
    the first repeating cell (columns up to preamble_size + cell_size).
    After the preamble the matrix repeats in cells of cell_size rows:
    ``cell_diag`` holds the intra-cell entries (symmetric, diagonal
    included) and ``cell_coupling[i][j]`` is the entry linking row i of
    cell t+1 to column j of cell t.  Every row therefore touches at most
    three consecutive cells, and the induced matrix is symmetric by
    construction.
    """

    cell_size: int
    cell_diag: Gf2Matrix
    cell_coupling: Gf2Matrix
    preamble: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        c = self.cell_size
        if c < 1:
            raise ValueError("cell_size must be >= 1")
        if (self.cell_diag.rows, self.cell_diag.cols) != (c, c):
            raise ValueError(f"cell_diag must be {c}x{c}")
        if (self.cell_coupling.rows, self.cell_coupling.cols) != (c, c):
            raise ValueError(f"cell_coupling must be {c}x{c}")
        if not self.cell_diag.is_symmetric():
            raise ValueError("cell_diag must be symmetric")
        p = len(self.preamble)
        object.__setattr__(
            self, "preamble",
            _validate_supports(self.preamble, p + c, "preamble"))
        for q in range(1, p + 1):
            for j in self.preamble[q - 1]:
                if j <= p and q not in self.preamble[j - 1]:
                    raise ValueError(
                        f"preamble not symmetric: ({q},{j}) set, ({j},{q}) not")

    @property
    def preamble_size(self) -> int:
        return len(self.preamble)

    def cell_diagonal(self) -> Gf2Vector:
        return self.cell_diag.diagonal()

    def support(self, r: int) -> tuple[int, ...]:
        """Row support of the induced infinite matrix, 1-based."""
        if r < 1:
            raise IndexError(f"row index {r} must be >= 1")
        p, c = self.preamble_size, self.cell_size
        if r <= p:
            return self.preamble[r - 1]
        t, i = divmod(r - p - 1, c)
        cols: list[int] = []
        if t == 0:
            col = p + i + 1
            cols.extend(q for q in range(1, p + 1)
                        if col in self.preamble[q - 1])
        else:
            prev_base = p + (t - 1) * c
            cols.extend(prev_base + j + 1 for j in range(c)
                        if self.cell_coupling.get(i, j))
        base = p + t * c
        cols.extend(base + j + 1 for j in range(c) if self.cell_diag.get(i, j))
        next_base = p + (t + 1) * c
        cols.extend(next_base + j + 1 for j in range(c)
                    if self.cell_coupling.get(j, i))
        return tuple(sorted(cols))

    def to_row_finite(self) -> RowFiniteMatrix:
        return RowFiniteMatrix(self.support, kind="periodic", spec=self)


def identity_diagonal_matrix() -> RowFiniteMatrix:
    """The infinite identity: support(i) = {i}."""
    return RowFiniteMatrix(lambda i: (i,))


def closed_path_matrix() -> RowFiniteMatrix:
    """The infinite path with closed neighborhoods: {i-1, i, i+1} within N."""
    return RowFiniteMatrix(lambda i: tuple(j for j in (i - 1, i, i + 1) if j >= 1))


def open_path_matrix() -> RowFiniteMatrix:
    """The infinite path with open neighborhoods (zero diagonal)."""
    return RowFiniteMatrix(lambda i: tuple(j for j in (i - 1, i + 1) if j >= 1))


def ladder_matrix() -> RowFiniteMatrix:
    """Width-2 ladder, closed neighborhoods: v sees itself, its rung
    partner, and v +- 2 along its rail.  Vertices numbered rung by rung."""
    def sup(v: int) -> tuple[int, ...]:
        partner = v + 1 if v % 2 else v - 1
        return tuple(sorted(j for j in (v - 2, partner, v, v + 2) if j >= 1))
    return RowFiniteMatrix(sup)


def identity_spec() -> PeriodicSpec:
    """Periodic form of the infinite identity (all-ones diagonal)."""
    return PeriodicSpec(1, Gf2Matrix.from_rows(["1"]), Gf2Matrix.from_rows(["0"]))


def closed_path_spec() -> PeriodicSpec:
    """Periodic form of the closed-neighborhood infinite path."""
    return PeriodicSpec(1, Gf2Matrix.from_rows(["1"]), Gf2Matrix.from_rows(["1"]))


def open_path_spec() -> PeriodicSpec:
    """Periodic form of the open-neighborhood infinite path (zero diagonal)."""
    return PeriodicSpec(1, Gf2Matrix.from_rows(["0"]), Gf2Matrix.from_rows(["1"]))


def _rows_to_matrix(rows, size: int, what: str) -> Gf2Matrix:
    if not isinstance(rows, list) or len(rows) != size:
        raise ValueError(f"{what} must be a list of {size} rows")
    parsed = []
    for row in rows:
        if isinstance(row, str):
            bits = row
        elif isinstance(row, list):
            if any(b not in (0, 1) for b in row):
                raise ValueError(f"{what} entries must be 0 or 1")
            bits = "".join(str(b) for b in row)
        else:
            raise ValueError(f"{what} rows must be strings or lists of 0/1")
        if len(bits) != size or any(ch not in "01" for ch in bits):
            raise ValueError(f"{what} row {bits!r} is not {size} bits of 0/1")
        parsed.append(bits)
    return Gf2Matrix.from_rows(parsed, cols=size)


def parse_periodic_spec_json(text: str) -> PeriodicSpec:
    """Parse the JSON spec file; raises ValueError on any malformation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"spec is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("spec document must be a JSON object")
    if doc.get("format") != PERIODIC_SPEC_FORMAT:
        raise ValueError(f"unknown spec format tag: {doc.get('format')!r}")
    if doc.get("version") != PERIODIC_SPEC_VERSION:
        raise ValueError(f"unsupported spec version: {doc.get('version')!r}")
    cell_size = doc.get("cell_size")
    if not isinstance(cell_size, int) or cell_size < 1:
        raise ValueError("cell_size must be a positive integer")
    diag = _rows_to_matrix(doc.get("cell_diag"), cell_size, "cell_diag")
    coupling = _rows_to_matrix(doc.get("cell_coupling"), cell_size, "cell_coupling")
    preamble_doc = doc.get("preamble", [])
    if not isinstance(preamble_doc, list):
        raise ValueError("preamble must be a list of support lists")
    preamble = []
    for sup in preamble_doc:
        if not isinstance(sup, list) or any(not isinstance(j, int) for j in sup):
            raise ValueError("preamble supports must be lists of integers")
        preamble.append(tuple(sup))
    return PeriodicSpec(cell_size, diag, coupling, tuple(preamble))


def format_periodic_spec_json(spec: PeriodicSpec) -> str:
    doc = {
        "format": PERIODIC_SPEC_FORMAT,
        "version": PERIODIC_SPEC_VERSION,
        "cell_size": spec.cell_size,
        "cell_diag": [[spec.cell_diag.get(i, j) for j in range(spec.cell_size)]
                      for i in range(spec.cell_size)],
        "cell_coupling": [[spec.cell_coupling.get(i, j)
                           for j in range(spec.cell_size)]
                          for i in range(spec.cell_size)],
        "preamble": [list(sup) for sup in spec.preamble],
    }
    return json.dumps(doc, indent=2) + "\n"
