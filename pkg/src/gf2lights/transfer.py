"""Prefix solution sets for A x = b over infinite row-finite symmetric matrices.

Two routes are offered.  For an arbitrary support generator, horizon
truncation: S_H(p) is the set of length-p prefixes of solutions of the
finite system over rows 1..n+k_{H-1} in variables 1..n+k_H, computed by
elimination and projection.  These sets only shrink as H grows and every
infinite solution survives all horizons, so each S_H is a sound
over-approximation of the true prefix set.

For a periodic spec the true set is computable: assignments to two
consecutive cells form the states of a finite automaton whose
transitions encode the repeating block equation, and a state can begin
an infinite solution tail iff it survives greatest-fixed-point pruning
of successor-free states.  Walking start states through live states and
projecting yields the exact prefix set, certified final.

The right-hand side defaults to the diagonal, for which every truncated
system is solvable and the exact set is never empty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    CellTooLargeError,
    Gf2LightsError,
    InternalTheoremViolation,
    PrefixTooLongError,
    UnsolvableError,
)
from .gf2core import AffineSolutionSet, Gf2Matrix, Gf2Vector, solve
from .rowfinite import PeriodicSpec, RowFiniteMatrix, cut_points, window

DEFAULT_MAX_CELL_SIZE = 12
DEFAULT_ENUMERATION_LIMIT = 1 << 20

__all__ = [
    "PrefixSolutionSet",
    "TransferAutomaton",
    "PrefixAnswer",
    "consistent_prefixes",
    "build_automaton",
    "live_states",
    "exact_prefixes",
    "solve_prefix",
]


def _bits_to_str(bits: int, p: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(p))


@dataclass(frozen=True)
class PrefixSolutionSet:
    """Length-p solution prefixes at a horizon, or exact when horizon is None.

    Prefix strings use variable order: character i is the value of
    variable i+1.  Horizon sets are antitone in the horizon; an exact set
    is final and equals the intersection of all horizon sets.
    """

    p: int
    horizon: int | None
    prefixes: frozenset[str]

    def __post_init__(self):
        if any(len(w) != self.p or set(w) - {"0", "1"} for w in self.prefixes):
            raise ValueError("prefixes must be length-p strings of 0/1")

    @property
    def is_exact(self) -> bool:
        return self.horizon is None

    def to_json(self) -> str:
        doc = {
            "p": self.p,
            "horizon": "exact" if self.horizon is None else self.horizon,
            "prefixes": sorted(self.prefixes),
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PrefixSolutionSet":
        doc = json.loads(text)
        horizon = doc["horizon"]
        if horizon == "exact":
            horizon = None
        elif not isinstance(horizon, int):
            raise ValueError(f"bad horizon field: {horizon!r}")
        return cls(doc["p"], horizon, frozenset(doc["prefixes"]))


def consistent_prefixes(m: RowFiniteMatrix | PeriodicSpec, n: int, p: int,
                        horizon: int,
                        rhs: Gf2Vector | None = None) -> PrefixSolutionSet:
    """The horizon set S_H(p): prefixes of solutions of the truncated system.

    The system takes rows 1..n+k_{H-1} in variables 1..n+k_H, with cut
    points from the minimal cut sequence, and is solved exactly; the
    result is the projection of its full affine solution set onto the
    first p coordinates.  rhs None means the diagonal target, for which
    the set is never empty (each truncated symmetric system is solvable);
    an explicit rhs may yield an empty set.
    """
    if isinstance(m, PeriodicSpec):
        m = m.to_row_finite()
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if p < 0:
        raise ValueError("prefix length must be >= 0")
    cuts = cut_points(m, n, horizon)
    if p > n + cuts[0]:
        raise PrefixTooLongError(
            f"prefix length {p} exceeds n + k1 = {n + cuts[0]}")
    n_rows = n + (cuts[horizon - 2] if horizon >= 2 else 0)
    n_vars = n + cuts[horizon - 1]
    win = window(m, n_vars)
    system = win.submatrix(0, n_rows, 0, n_vars)
    if rhs is None:
        b = Gf2Vector.from_bits(win.get(i, i) for i in range(n_rows))
    else:
        if rhs.length < n_rows:
            raise ValueError(
                f"rhs has {rhs.length} entries, horizon system needs {n_rows}")
        b = rhs.prefix(n_rows)
    sol = solve(system, b)
    if not sol.feasible:
        if rhs is None:
            raise InternalTheoremViolation(
                "truncated diagonal system infeasible; input matrix is "
                "likely not symmetric")
        return PrefixSolutionSet(p, horizon, frozenset())
    projected = sol.project(p)
    prefixes = frozenset(v.to01() for v in projected.solutions())
    return PrefixSolutionSet(p, horizon, prefixes)


def _block_rows(mat: Gf2Matrix) -> list[int]:
    return [mat.row_int(i) for i in range(mat.rows)]


def _apply(rows: list[int], x: int) -> int:
    out = 0
    for i, row in enumerate(rows):
        if (row & x).bit_count() & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class TransferAutomaton:
    """Finite-state view of the repeating block equations of a periodic spec.

    States are pairs (u, v) of cell assignments, stored as c-bit ints:
    the values of two consecutive variable cells.  (u, v) steps to
    (v, w) iff coupling*u xor diag*v xor coupling^T*w equals the cell
    target, which is the block equation of the middle cell.  Start states
    are the (cell0, cell1) assignments consistent with the head system
    (preamble rows plus cell-0 rows); the full head solution set is kept
    so prefix extraction can recover preamble variable values.
    """

    cell_size: int
    preamble_size: int
    cell_target: int
    start_system: AffineSolutionSet
    start_states: frozenset[tuple[int, int]]
    _succ_w: tuple[tuple[int, ...], ...] = field(repr=False)
    _pred_u: tuple[tuple[int, ...], ...] = field(repr=False)
    _m_u: tuple[int, ...] = field(repr=False)
    _d_v: tuple[int, ...] = field(repr=False)
    _ct_w: tuple[int, ...] = field(repr=False)

    @property
    def state_count(self) -> int:
        return 1 << (2 * self.cell_size)

    def states(self):
        c = self.cell_size
        for u in range(1 << c):
            for v in range(1 << c):
                yield (u, v)

    def successors(self, state: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        u, v = state
        target = self.cell_target ^ self._m_u[u] ^ self._d_v[v]
        return tuple((v, w) for w in self._succ_w[target])

    def predecessors(self, state: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        v, w = state
        target = self.cell_target ^ self._d_v[v] ^ self._ct_w[w]
        return tuple((u, v) for u in self._pred_u[target])


def build_automaton(spec: PeriodicSpec,
                    rhs_head: Gf2Vector | None = None,
                    rhs_cell: Gf2Vector | None = None,
                    max_cell_size: int = DEFAULT_MAX_CELL_SIZE) -> TransferAutomaton:
    """Construct the transfer automaton for a periodic spec.

    rhs_head overrides the targets of the head rows (preamble plus cell
    0, so preamble_size + cell_size bits) and rhs_cell the repeating
    per-cell target; both default to the matching slice of the diagonal.
    Raises CellTooLarge when the state space 2^(2c) would exceed the
    configured bound.
    """
    c = spec.cell_size
    if c > max_cell_size:
        raise CellTooLargeError(
            f"cell size {c} exceeds the bound {max_cell_size} "
            f"(state count 2^{2 * c})")
    p_size = spec.preamble_size
    if rhs_cell is None:
        cell_target = spec.cell_diagonal().to_int()
    else:
        if rhs_cell.length != c:
            raise ValueError(f"rhs_cell must have {c} bits")
        cell_target = rhs_cell.to_int()

    coupling = _block_rows(spec.cell_coupling)
    coupling_t = _block_rows(spec.cell_coupling.transpose())
    diag = _block_rows(spec.cell_diag)
    size = 1 << c
    m_u = tuple(_apply(coupling, u) for u in range(size))
    d_v = tuple(_apply(diag, v) for v in range(size))
    ct_w = tuple(_apply(coupling_t, w) for w in range(size))
    succ_w: list[list[int]] = [[] for _ in range(size)]
    pred_u: list[list[int]] = [[] for _ in range(size)]
    for w in range(size):
        succ_w[ct_w[w]].append(w)
    for u in range(size):
        pred_u[m_u[u]].append(u)

    head_rows = p_size + c
    head_vars = p_size + 2 * c
    win = window(spec.to_row_finite(), head_vars)
    system = win.submatrix(0, head_rows, 0, head_vars)
    if rhs_head is None:
        b = Gf2Vector.from_bits(win.get(i, i) for i in range(head_rows))
    else:
        if rhs_head.length != head_rows:
            raise ValueError(f"rhs_head must have {head_rows} bits")
        b = rhs_head
    start_system = solve(system, b)

    cell_mask = size - 1
    start_states: set[tuple[int, int]] = set()
    if start_system.feasible:
        assert start_system.particular is not None
        particular = start_system.particular.to_int() >> p_size
        basis = {}
        for vec in start_system.nullspace_basis:
            x = vec.to_int() >> p_size
            while x:
                msb = x.bit_length() - 1
                if msb in basis:
                    x ^= basis[msb]
                else:
                    basis[msb] = x
                    break
        vals = [particular]
        for x in basis.values():
            vals += [v ^ x for v in vals]
        for v in vals:
            start_states.add((v & cell_mask, (v >> c) & cell_mask))

    return TransferAutomaton(
        cell_size=c,
        preamble_size=p_size,
        cell_target=cell_target,
        start_system=start_system,
        start_states=frozenset(start_states),
        _succ_w=tuple(tuple(ws) for ws in succ_w),
        _pred_u=tuple(tuple(us) for us in pred_u),
        _m_u=m_u,
        _d_v=d_v,
        _ct_w=ct_w,
    )


def live_states(automaton: TransferAutomaton) -> frozenset[tuple[int, int]]:
    """States that begin an infinite transition path.

    Greatest fixed point of successor pruning: repeatedly delete states
    with no successor among the survivors.  On a finite graph the
    survivors are exactly the states that reach a cycle.
    """
    out_degree = {}
    dead: list[tuple[int, int]] = []
    for state in automaton.states():
        deg = len(automaton.successors(state))
        out_degree[state] = deg
        if deg == 0:
            dead.append(state)
    alive = {state: True for state in out_degree}
    for state in dead:
        alive[state] = False
    while dead:
        state = dead.pop()
        for pred in automaton.predecessors(state):
            if not alive[pred]:
                continue
            out_degree[pred] -= 1
            if out_degree[pred] == 0:
                alive[pred] = False
                dead.append(pred)
    return frozenset(s for s, ok in alive.items() if ok)


def exact_prefixes(spec: PeriodicSpec, p: int,
                   rhs_head: Gf2Vector | None = None,
                   rhs_cell: Gf2Vector | None = None,
                   max_cell_size: int = DEFAULT_MAX_CELL_SIZE,
                   enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT
                   ) -> PrefixSolutionSet:
    """The exact set of length-p prefixes extendable to full infinite solutions.

    Head solutions whose (cell0, cell1) state is live are walked through
    live states until p variables are covered; the distinct truncations
    are the answer, certified final (horizon None).  For the default
    diagonal target an empty result is impossible and raises
    InternalTheoremViolation; for an explicit target it raises
    Unsolvable.
    """
    if p < 0:
        raise ValueError("prefix length must be >= 0")
    automaton = build_automaton(spec, rhs_head, rhs_cell,
                                max_cell_size=max_cell_size)
    live = live_states(automaton)
    c = automaton.cell_size
    covered = automaton.preamble_size + 2 * c
    p_mask = (1 << p) - 1

    frontier: set[tuple[int, tuple[int, int]]] = set()
    start = automaton.start_system
    if start.feasible:
        if start.solution_count() > enumeration_limit:
            raise Gf2LightsError(
                f"head system has {start.solution_count()} solutions, "
                f"limit {enumeration_limit}")
        for point in start.solutions(limit=enumeration_limit):
            bits = point.to_int()
            state = ((bits >> automaton.preamble_size) & ((1 << c) - 1),
                     (bits >> (automaton.preamble_size + c)) & ((1 << c) - 1))
            if state in live:
                frontier.add((bits & p_mask, state))
    if not frontier:
        if rhs_head is None and rhs_cell is None:
            raise InternalTheoremViolation(
                "no live start state for the diagonal target")
        raise UnsolvableError(
            "the infinite system has no solution for this right-hand side")

    while covered < p:
        next_frontier: set[tuple[int, tuple[int, int]]] = set()
        for bits, state in frontier:
            for nxt in automaton.successors(state):
                if nxt in live:
                    new_bits = (bits | (nxt[1] << covered)) & p_mask
                    next_frontier.add((new_bits, nxt))
        frontier = next_frontier
        covered += c
        if len(frontier) > enumeration_limit:
            raise Gf2LightsError(
                f"prefix frontier exceeded {enumeration_limit} entries; "
                f"request a shorter prefix")

    prefixes = frozenset(_bits_to_str(bits, p) for bits, _ in frontier)
    return PrefixSolutionSet(p, None, prefixes)


class PrefixAnswer(NamedTuple):
    """A single chosen prefix plus its certificate tag."""

    prefix: str
    certificate: str


def solve_prefix(source: PeriodicSpec | RowFiniteMatrix, p: int,
                 horizon: int | None = None, n: int = 1,
                 rhs: Gf2Vector | None = None,
                 max_cell_size: int = DEFAULT_MAX_CELL_SIZE) -> PrefixAnswer:
    """The lexicographically least consistent prefix, with certificate.

    A periodic spec (given directly, or attached to a periodic
    row-finite matrix when no horizon is requested) yields the exact
    answer with certificate EXACT; otherwise the requested horizon H is
    used and the certificate is HORIZON(H), a sound over-approximation
    that later horizons may refine.  Bit order equals variable order, so
    the string minimum is the lexicographic minimum.
    """
    if isinstance(source, RowFiniteMatrix) and horizon is None:
        if source.spec is None:
            raise ValueError(
                "a horizon is required for a non-periodic row-finite matrix")
        source = source.spec
    if isinstance(source, PeriodicSpec) and horizon is None:
        if rhs is not None:
            raise ValueError(
                "exact prefixes take rhs_head/rhs_cell via exact_prefixes; "
                "pass a horizon to use a finite rhs")
        result = exact_prefixes(source, p, max_cell_size=max_cell_size)
        certificate = "EXACT"
    else:
        if horizon is None:
            raise ValueError("a horizon is required")
        result = consistent_prefixes(source, n, p, horizon, rhs=rhs)
        certificate = f"HORIZON({horizon})"
        if not result.prefixes:
            raise UnsolvableError(
                f"no consistent prefix at horizon {horizon}")
    return PrefixAnswer(min(result.prefixes), certificate)
