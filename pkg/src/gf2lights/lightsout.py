"""Lights Out on finite graphs and on infinite row-finite graphs.

Pressing a vertex toggles its neighbors, and the vertex itself exactly
when it carries a self-loop: the influence matrix has a_ij = 1 for edges
{i,j} and a_ii = 1 for self-looped i, so it is symmetric and its
diagonal is the self-loop pattern.  Solving a board is solving
A x = initial xor target; the diagonal-in-range guarantee makes the
self-loop pattern always reachable from the all-off board, on finite
and infinite graphs alike.

Vertices are numbered from 1 everywhere in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import transfer
from .diagrange import solve_diagonal
from .errors import UnsolvableBoardError
from .gf2core import Gf2Matrix, Gf2Vector, matvec, nullspace, solve
from .rowfinite import PeriodicSpec, RowFiniteMatrix, window

__all__ = [
    "Graph",
    "BoardState",
    "ClickSet",
    "InfiniteGraph",
    "influence_matrix",
    "press",
    "apply_clicks",
    "solve_board",
    "self_loop_pattern",
    "infinite_self_loop_prefix",
    "classic_grid",
    "parse_graph_json",
    "format_graph_json",
    "parse_board_text",
    "format_board_text",
]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with a separate self-loop marking.

    ``adjacency[i]`` lists the neighbors of vertex i+1 (sorted, 1-based,
    never containing i+1 itself); ``self_loops`` bit i marks vertex i+1.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    self_loops: Gf2Vector

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be >= 0")
        if len(self.adjacency) != n or self.self_loops.length != n:
            raise ValueError("adjacency and self_loops must cover every vertex")
        for i, nbrs in enumerate(self.adjacency, start=1):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {i} must be sorted and distinct")
            for j in nbrs:
                if not 1 <= j <= n:
                    raise ValueError(f"neighbor {j} of {i} out of range")
                if j == i:
                    raise ValueError(
                        f"vertex {i} listed as its own neighbor; use self_loops")
                if i not in self.adjacency[j - 1]:
                    raise ValueError(f"edge {{{i},{j}}} missing its mirror")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   self_loops: Iterable[int] = ()) -> "Graph":
        """Build from an edge list and a list of self-looped vertices."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for edge in edges:
            if len(edge) != 2:
                raise ValueError(f"edge {edge!r} must have two endpoints")
            i, j = int(edge[0]), int(edge[1])
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i},{j}}} out of range")
            if i == j:
                raise ValueError(
                    f"edge {{{i},{j}}} is a loop; list it in self_loops")
            nbrs[i - 1].add(j)
            nbrs[j - 1].add(i)
        loops = tuple(self_loops)
        for v in loops:
            if not 1 <= v <= n:
                raise ValueError(f"self-loop vertex {v} out of range")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs),
                   Gf2Vector.from_indices(n, [v - 1 for v in loops]))

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_self_loop(self, v: int) -> bool:
        return bool(self.self_loops[v - 1])


@dataclass(frozen=True)
class BoardState:
    """Per-vertex light state; bit i is vertex i+1, 1 means on."""

    lights: Gf2Vector

    @classmethod
    def from_string(cls, text: str) -> "BoardState":
        return cls(Gf2Vector.from_string(text))

    @classmethod
    def all_off(cls, n: int) -> "BoardState":
        return cls(Gf2Vector.zeros(n))

    @classmethod
    def all_on(cls, n: int) -> "BoardState":
        return cls(Gf2Vector.ones(n))

    def to01(self) -> str:
        return self.lights.to01()

    def is_off(self) -> bool:
        return self.lights.is_zero()

    def __xor__(self, other: "BoardState") -> "BoardState":
        return BoardState(self.lights ^ other.lights)


@dataclass(frozen=True)
class ClickSet:
    """A set of vertices to press; order never matters and double-press
    cancels, so a bit vector is the whole story."""

    clicks: Gf2Vector

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "ClickSet":
        return cls(Gf2Vector.from_indices(n, [v - 1 for v in vertices]))

    def vertices(self) -> tuple[int, ...]:
        """The pressed vertices, 1-based ascending."""
        return tuple(i + 1 for i in self.clicks.support())

    def weight(self) -> int:
        return self.clicks.popcount()


def influence_matrix(g: Graph) -> Gf2Matrix:
    """Column v marks the lights toggled by pressing v; symmetric, with
    the self-loop pattern on the diagonal."""
    ints = []
    for i in range(1, g.vertex_count + 1):
        v = 0
        for j in g.adjacency[i - 1]:
            v |= 1 << (j - 1)
        if g.has_self_loop(i):
            v |= 1 << (i - 1)
        ints.append(v)
    return Gf2Matrix.from_row_ints(ints, g.vertex_count)


def press(g: Graph, state: BoardState, v: int) -> BoardState:
    """One button press: toggles the open or closed neighborhood of v
    depending on its self-loop."""
    if not 1 <= v <= g.vertex_count:
        raise IndexError(f"vertex {v} out of range 1..{g.vertex_count}")
    toggled = [j - 1 for j in g.adjacency[v - 1]]
    if g.has_self_loop(v):
        toggled.append(v - 1)
    delta = Gf2Vector.from_indices(g.vertex_count, toggled)
    return BoardState(state.lights ^ delta)


def apply_clicks(g: Graph, state: BoardState, clicks: ClickSet) -> BoardState:
    """Simulate a click set press by press."""
    for v in clicks.vertices():
        state = press(g, state, v)
    return state


def solve_board(g: Graph, initial: BoardState,
                target: BoardState | None = None) -> ClickSet:
    """The canonical click set taking initial to target (all-off default).

    Raises UnsolvableBoardError carrying a witness z with z^T A = 0 and
    z . b = 1 when the target is unreachable; the witness certifies that
    b = initial xor target lies outside the range of the influence
    matrix.
    """
    n = g.vertex_count
    if target is None:
        target = BoardState.all_off(n)
    if initial.lights.length != n or target.lights.length != n:
        raise ValueError("board length does not match the graph")
    a = influence_matrix(g)
    b = initial.lights ^ target.lights
    result = solve(a, b)
    if not result.feasible:
        witness = None
        for z in nullspace(a):
            if z.dot(b):
                witness = z
                break
        assert witness is not None and matvec(a, witness).is_zero()
        raise UnsolvableBoardError(
            "target unreachable: a kernel vector meets the difference "
            "an odd number of times", witness=witness)
    assert result.particular is not None
    return ClickSet(result.particular)


def self_loop_pattern(g: Graph) -> ClickSet:
    """Clicks that, from all-off, light exactly the self-looped vertices.

    This is A x = diagonal(A) for the influence matrix, solvable for
    every graph by the diagonal-in-range guarantee.
    """
    return ClickSet(solve_diagonal(influence_matrix(g)))


@dataclass(frozen=True)
class InfiniteGraph:
    """A countable graph with finite degrees, via its influence matrix.

    ``matrix`` is the row-finite influence matrix; when it was induced
    by a periodic spec, exact infinite-prefix answers are available.
    """

    matrix: RowFiniteMatrix

    @classmethod
    def from_periodic_spec(cls, spec: PeriodicSpec) -> "InfiniteGraph":
        return cls(spec.to_row_finite())

    @classmethod
    def from_row_finite(cls, matrix: RowFiniteMatrix) -> "InfiniteGraph":
        return cls(matrix)

    @property
    def spec(self) -> PeriodicSpec | None:
        return self.matrix.spec

    def self_loop_prefix(self, p: int) -> Gf2Vector:
        """The first p diagonal entries: which of vertices 1..p are blue."""
        win = window(self.matrix, p)
        return Gf2Vector.from_bits(win.get(i, i) for i in range(p))


def infinite_self_loop_prefix(ig: InfiniteGraph, p: int,
                              horizon: int | None = None,
                              n: int = 1) -> tuple[ClickSet, str]:
    """First p click decisions lighting exactly the self-looped vertices.

    Exact (certificate EXACT) when the graph carries a periodic spec and
    no horizon is forced; otherwise the requested horizon's sound
    answer, tagged HORIZON(H).
    """
    answer = transfer.solve_prefix(ig.matrix, p, horizon=horizon, n=n)
    return ClickSet(Gf2Vector.from_string(answer.prefix)), answer.certificate


def classic_grid(rows: int, cols: int) -> Graph:
    """The classic board: rows x cols grid, rectilinear adjacency, every
    vertex self-looped, numbered row-major from 1."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be >= 1")
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(n, edges, self_loops=range(1, n + 1))


def parse_graph_json(text: str) -> Graph:
    """Parse {n, edges: [[i,j]...], self_loops: [i...]}; ValueError on
    malformation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"graph is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    edges = doc.get("edges", [])
    loops = doc.get("self_loops", [])
    if not isinstance(edges, list) or not isinstance(loops, list):
        raise ValueError("edges and self_loops must be lists")
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 \
                or not all(isinstance(x, int) for x in e):
            raise ValueError(f"bad edge entry: {e!r}")
    if not all(isinstance(v, int) for v in loops):
        raise ValueError("self_loops must be integers")
    return Graph.from_edges(n, edges, loops)


def format_graph_json(g: Graph) -> str:
    edges = []
    for i in range(1, g.vertex_count + 1):
        for j in g.adjacency[i - 1]:
            if i < j:
                edges.append([i, j])
    doc = {
        "n": g.vertex_count,
        "edges": edges,
        "self_loops": [i + 1 for i in g.self_loops.support()],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_board_text(text: str) -> tuple[int, int, BoardState]:
    """Parse the board file: "rows cols" then 0/1 grid lines, row-major.

    Returns (rows, cols, state); a single-line "1 n" board serves
    arbitrary graphs.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty board text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad board header: {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad board header: {lines[0]!r}") from exc
    if rows < 1 or cols < 1:
        raise ValueError("board dimensions must be >= 1")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} board lines, got {len(body)}")
    for ln in body:
        if len(ln) != cols or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad board line: {ln!r}")
    return rows, cols, BoardState.from_string("".join(body))


def format_board_text(rows: int, cols: int, state: BoardState) -> str:
    if state.lights.length != rows * cols:
        raise ValueError("state length does not match the grid")
    bits = state.to01()
    lines = [f"{rows} {cols}"]
    for r in range(rows):
        lines.append(bits[r * cols:(r + 1) * cols])
    return "\n".join(lines) + "\n"
