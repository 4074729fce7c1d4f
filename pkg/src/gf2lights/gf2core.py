"""Bit-packed exact linear algebra over Z2.

Vectors and dense matrices store their bits in 64-bit words, little-end
bit order: bit i of a vector is bit (i mod 64) of word (i div 64).  Unused
tail bits of the last word are kept zero, so equality is word-wise.  All
values are immutable from the caller's perspective and safe to share
between threads.

Bit positions on :class:`Gf2Vector` / :class:`Gf2Matrix` are 0-based;
the only exception is :func:`column_cut`, whose row/column arguments are
1-based to match the rest of the toolkit's matrix-index convention.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import DimensionMismatchError

WORD_BITS = 64

__all__ = [
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
]


def _n_words(length: int) -> int:
    return (length + WORD_BITS - 1) // WORD_BITS


def _tail_mask(length: int) -> int:
    rem = length % WORD_BITS
    return (1 << rem) - 1 if rem else (1 << WORD_BITS) - 1


def _int_to_words(value: int, n_words: int) -> np.ndarray:
    buf = value.to_bytes(n_words * 8, "little")
    return np.frombuffer(buf, dtype="<u8").astype(np.uint64)


def _words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(words.astype("<u8", copy=False).tobytes(), "little")


class Gf2Vector:
    """An immutable bit vector over Z2."""

    __slots__ = ("length", "_words")

    def __init__(self, length: int, words: np.ndarray | None = None):
        if length < 0:
            raise ValueError("length must be >= 0")
        self.length = length
        if words is None:
            words = np.zeros(_n_words(length), dtype=np.uint64)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            if words.shape != (_n_words(length),):
                raise DimensionMismatchError(
                    f"expected {_n_words(length)} words for length {length}")
            if length % WORD_BITS and words.size:
                words = words.copy()
                words[-1] &= np.uint64(_tail_mask(length))
        self._words = words

    @classmethod
    def zeros(cls, length: int) -> "Gf2Vector":
        return cls(length)

    @classmethod
    def ones(cls, length: int) -> "Gf2Vector":
        return cls.from_int(length, (1 << length) - 1)

    @classmethod
    def from_int(cls, length: int, bits: int) -> "Gf2Vector":
        """Build from an int whose bit i is entry i."""
        bits &= (1 << length) - 1 if length else 0
        return cls(length, _int_to_words(bits, _n_words(length)))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Gf2Vector":
        value = 0
        n = 0
        for b in bits:
            if b & 1:
                value |= 1 << n
            n += 1
        return cls.from_int(n, value)

    @classmethod
    def from_string(cls, text: str) -> "Gf2Vector":
        """Parse a string of 0/1 characters; character i is entry i."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "Gf2Vector":
        """Build with ones at the given 0-based positions."""
        value = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(f"bit index {i} out of range for length {length}")
            value |= 1 << i
        return cls.from_int(length, value)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def to_int(self) -> int:
        return _words_to_int(self._words)

    def to01(self) -> str:
        v = self.to_int()
        return "".join("1" if (v >> i) & 1 else "0" for i in range(self.length))

    def bits(self) -> Iterator[int]:
        v = self.to_int()
        for i in range(self.length):
            yield (v >> i) & 1

    def support(self) -> tuple[int, ...]:
        """0-based positions of the one entries, ascending."""
        out = []
        v = self.to_int()
        while v:
            out.append((v & -v).bit_length() - 1)
            v &= v - 1
        return tuple(out)

    def popcount(self) -> int:
        return self.to_int().bit_count()

    def dot(self, other: "Gf2Vector") -> int:
        """Inner product over Z2 (parity of the AND)."""
        if self.length != other.length:
            raise DimensionMismatchError(
                f"dot of lengths {self.length} and {other.length}")
        return (self.to_int() & other.to_int()).bit_count() & 1

    def prefix(self, p: int) -> "Gf2Vector":
        """The first p entries as a new vector."""
        if not 0 <= p <= self.length:
            raise IndexError(f"prefix length {p} out of range")
        return Gf2Vector.from_int(p, self.to_int())

    def with_bit(self, i: int, value: int) -> "Gf2Vector":
        """A copy with entry i set to value."""
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range")
        v = self.to_int()
        v = v | (1 << i) if value & 1 else v & ~(1 << i)
        return Gf2Vector.from_int(self.length, v)

    def is_zero(self) -> bool:
        return not self._words.any()

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        return int(self._words[i // WORD_BITS] >> np.uint64(i % WORD_BITS)) & 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.length != other.length:
            raise DimensionMismatchError(
                f"xor of lengths {self.length} and {other.length}")
        return Gf2Vector(self.length, self._words ^ other._words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        return self.length == other.length and bool(
            np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.length, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Vector({self.to01()!r})"


class Gf2Matrix:
    """An immutable dense matrix over Z2, one packed row per line."""

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("rows and cols must be >= 0")
        self.rows = rows
        self.cols = cols
        wpr = _n_words(cols)
        if words is None:
            words = np.zeros((rows, wpr), dtype=np.uint64)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            if words.shape != (rows, wpr):
                raise DimensionMismatchError(
                    f"expected shape {(rows, wpr)}, got {words.shape}")
            if cols % WORD_BITS and words.size:
                words = words.copy()
                words[:, -1] &= np.uint64(_tail_mask(cols))
        self._words = words

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        m = np.zeros((n, _n_words(n)), dtype=np.uint64)
        for i in range(n):
            m[i, i // WORD_BITS] = np.uint64(1) << np.uint64(i % WORD_BITS)
        return cls(n, n, m)

    @classmethod
    def from_rows(cls, rows: Sequence, cols: int | None = None) -> "Gf2Matrix":
        """Build from rows given as 0/1 strings, bit sequences, or vectors."""
        vecs = []
        for row in rows:
            if isinstance(row, Gf2Vector):
                vecs.append(row)
            elif isinstance(row, str):
                vecs.append(Gf2Vector.from_string(row))
            else:
                vecs.append(Gf2Vector.from_bits(row))
        if cols is None:
            if not vecs:
                raise ValueError("cols is required for an empty row list")
            cols = vecs[0].length
        if any(v.length != cols for v in vecs):
            raise DimensionMismatchError("rows have unequal lengths")
        words = np.zeros((len(vecs), _n_words(cols)), dtype=np.uint64)
        for i, v in enumerate(vecs):
            words[i] = v.words
        return cls(len(vecs), cols, words)

    @classmethod
    def from_row_ints(cls, rows: Sequence[int], cols: int) -> "Gf2Matrix":
        words = np.zeros((len(rows), _n_words(cols)), dtype=np.uint64)
        mask = (1 << cols) - 1
        for i, r in enumerate(rows):
            words[i] = _int_to_words(r & mask, words.shape[1])
        return cls(len(rows), cols, words)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def row(self, i: int) -> Gf2Vector:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} out of range")
        return Gf2Vector(self.cols, self._words[i].copy())

    def row_int(self, i: int) -> int:
        return _words_to_int(self._words[i])

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        value = 0
        for i in range(self.rows):
            if self.get(i, j):
                value |= 1 << i
        return Gf2Vector.from_int(self.rows, value)

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) out of range")
        return int(self._words[i, j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & 1

    def transpose(self) -> "Gf2Matrix":
        out = np.zeros((self.cols, _n_words(self.rows)), dtype=np.uint64)
        for i in range(self.rows):
            v = self.row_int(i)
            while v:
                j = (v & -v).bit_length() - 1
                out[j, i // WORD_BITS] |= np.uint64(1) << np.uint64(i % WORD_BITS)
                v &= v - 1
        return Gf2Matrix(self.cols, self.rows, out)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def diagonal(self) -> Gf2Vector:
        if self.rows != self.cols:
            raise DimensionMismatchError(
                f"diagonal of a {self.rows}x{self.cols} matrix")
        value = 0
        for i in range(self.rows):
            if self.get(i, i):
                value |= 1 << i
        return Gf2Vector.from_int(self.rows, value)

    def submatrix(self, row_start: int, row_stop: int, col_start: int,
                  col_stop: int) -> "Gf2Matrix":
        """The block at rows [row_start, row_stop) x cols [col_start, col_stop)."""
        if not (0 <= row_start <= row_stop <= self.rows
                and 0 <= col_start <= col_stop <= self.cols):
            raise IndexError("block out of range")
        n_rows = row_stop - row_start
        n_cols = col_stop - col_start
        mask = (1 << n_cols) - 1
        ints = [(self.row_int(row_start + i) >> col_start) & mask
                for i in range(n_rows)]
        return Gf2Matrix.from_row_ints(ints, n_cols)

    def to_lines(self) -> list[str]:
        return [self.row(i).to01() for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and bool(
            np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 100:
            return f"Gf2Matrix({self.to_lines()!r})"
        return f"Gf2Matrix({self.rows}x{self.cols})"


def _msb_basis(values: Iterable[int]) -> dict[int, int]:
    """Reduce the values to a basis keyed by highest set bit."""
    by_msb: dict[int, int] = {}
    for b in values:
        while b:
            m = b.bit_length() - 1
            if m in by_msb:
                b ^= by_msb[m]
            else:
                by_msb[m] = b
                break
    return by_msb


def _msb_reduce(value: int, by_msb: dict[int, int]) -> int:
    while value:
        m = value.bit_length() - 1
        if m not in by_msb:
            break
        value ^= by_msb[m]
    return value


@dataclass(frozen=True)
class AffineSolutionSet:
    """The solution set of a linear system over Z2.

    When feasible, the solutions are exactly ``particular`` xored with the
    span of ``nullspace_basis``; the basis vectors are linearly
    independent, so the set has 2**len(nullspace_basis) elements.
    """

    feasible: bool
    particular: Gf2Vector | None = None
    nullspace_basis: tuple[Gf2Vector, ...] = field(default_factory=tuple)

    def solution_count(self) -> int:
        return (1 << len(self.nullspace_basis)) if self.feasible else 0

    def contains(self, x: Gf2Vector) -> bool:
        """Membership test by reducing x - particular against the basis."""
        if not self.feasible:
            return False
        assert self.particular is not None
        delta = (x ^ self.particular).to_int()
        by_msb = _msb_basis(v.to_int() for v in self.nullspace_basis)
        return _msb_reduce(delta, by_msb) == 0

    def solutions(self, limit: int = 1 << 20) -> Iterator[Gf2Vector]:
        """Enumerate every solution (gray-code order over the basis)."""
        if not self.feasible:
            return
        assert self.particular is not None
        if self.solution_count() > limit:
            raise ValueError(
                f"solution set has {self.solution_count()} elements, limit {limit}")
        n = self.particular.length
        cur = self.particular.to_int()
        yield Gf2Vector.from_int(n, cur)
        basis = [v.to_int() for v in self.nullspace_basis]
        for i in range(1, 1 << len(basis)):
            cur ^= basis[(i & -i).bit_length() - 1]
            yield Gf2Vector.from_int(n, cur)

    def project(self, p: int) -> "AffineSolutionSet":
        """The image of this set under truncation to the first p coordinates.

        The projected basis is re-reduced so the result's basis is again
        independent; projections of distinct solutions may coincide.
        """
        if not self.feasible:
            return AffineSolutionSet(feasible=False)
        assert self.particular is not None
        if not 0 <= p <= self.particular.length:
            raise IndexError(f"projection length {p} out of range")
        mask = (1 << p) - 1
        by_msb = _msb_basis(v.to_int() & mask for v in self.nullspace_basis)
        basis = tuple(Gf2Vector.from_int(p, by_msb[m]) for m in sorted(by_msb))
        return AffineSolutionSet(True, self.particular.prefix(p), basis)


def matvec(a: Gf2Matrix, x: Gf2Vector) -> Gf2Vector:
    """The product A x over Z2; entry i is the parity of row i AND x."""
    if x.length != a.cols:
        raise DimensionMismatchError(
            f"matvec of {a.rows}x{a.cols} with length-{x.length} vector")
    out = np.zeros(_n_words(a.rows), dtype=np.uint64)
    if a.rows and a.cols:
        _kernels.matvec_into(a.words, x.words, out, a.rows)
    return Gf2Vector(a.rows, out)


def _rref_copy(a: Gf2Matrix) -> tuple[np.ndarray, list[int]]:
    work = a.words.copy()
    pivots = _kernels.rref(work, a.rows, a.cols) if a.rows and a.cols else []
    return work, pivots


def _basis_from_rref(work: np.ndarray, pivots: list[int], cols: int,
                     bit_at) -> tuple[Gf2Vector, ...]:
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, c in enumerate(pivots):
            if bit_at(work, r, free):
                v |= 1 << c
        basis.append(Gf2Vector.from_int(cols, v))
    return tuple(basis)


def _word_bit(work: np.ndarray, r: int, c: int) -> int:
    return int(work[r, c // WORD_BITS] >> np.uint64(c % WORD_BITS)) & 1


def solve(a: Gf2Matrix, b: Gf2Vector) -> AffineSolutionSet:
    """Solve A x = b, returning the full affine solution set.

    Elimination pivots on the leftmost available column; the particular
    solution sets every free variable to 0.  An inconsistent system yields
    ``feasible=False`` rather than an error.
    """
    if b.length != a.rows:
        raise DimensionMismatchError(
            f"solve of {a.rows}x{a.cols} with length-{b.length} rhs")
    aug_cols = a.cols + 1
    work = np.zeros((a.rows, _n_words(aug_cols)), dtype=np.uint64)
    for i in range(a.rows):
        v = a.row_int(i) | (b[i] << a.cols)
        work[i] = _int_to_words(v, work.shape[1])
    pivots = _kernels.rref(work, a.rows, a.cols) if a.rows else []
    b_col = a.cols
    for r in range(len(pivots), a.rows):
        if _word_bit(work, r, b_col):
            return AffineSolutionSet(feasible=False)
    x = 0
    for r, c in enumerate(pivots):
        if _word_bit(work, r, b_col):
            x |= 1 << c
    particular = Gf2Vector.from_int(a.cols, x)
    basis = _basis_from_rref(work, pivots, a.cols, _word_bit)
    return AffineSolutionSet(True, particular, basis)


def nullspace(a: Gf2Matrix) -> list[Gf2Vector]:
    """A basis of the kernel of A; rank(A) + len(basis) = A.cols."""
    work, pivots = _rref_copy(a)
    return list(_basis_from_rref(work, pivots, a.cols, _word_bit))


def rank(a: Gf2Matrix) -> int:
    _, pivots = _rref_copy(a)
    return len(pivots)


def quadratic_form(a: Gf2Matrix, z: Gf2Vector) -> int:
    """The value z^T A z over Z2."""
    if a.rows != a.cols:
        raise DimensionMismatchError(
            f"quadratic form of a {a.rows}x{a.cols} matrix")
    if z.length != a.cols:
        raise DimensionMismatchError(
            f"quadratic form with length-{z.length} vector on {a.cols} columns")
    return z.dot(matvec(a, z))


def column_cut(a: Gf2Matrix, i: int, j: int) -> Gf2Vector:
    """The first j entries of column i (both arguments 1-based)."""
    if not 1 <= i <= a.cols:
        raise IndexError(f"column {i} out of range 1..{a.cols}")
    if not 1 <= j <= a.rows:
        raise IndexError(f"row count {j} out of range 1..{a.rows}")
    value = 0
    for r in range(j):
        if a.get(r, i - 1):
            value |= 1 << r
    return Gf2Vector.from_int(j, value)


def parse_matrix_text(text: str) -> Gf2Matrix:
    """Parse the plain matrix format: a "rows cols" header, then 0/1 lines."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad matrix header: {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad matrix header: {lines[0]!r}") from exc
    if rows < 0 or cols < 0:
        raise ValueError("matrix dimensions must be >= 0")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, got {len(body)}")
    for ln in body:
        if len(ln) != cols or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad matrix row: {ln!r}")
    return Gf2Matrix.from_rows(body, cols=cols)


def format_matrix_text(a: Gf2Matrix) -> str:
    return "\n".join([f"{a.rows} {a.cols}", *a.to_lines()]) + "\n"


def random_matrix(rng: random.Random, rows: int, cols: int) -> Gf2Matrix:
    ints = [rng.getrandbits(cols) if cols else 0 for _ in range(rows)]
    return Gf2Matrix.from_row_ints(ints, cols)


def random_symmetric_matrix(rng: random.Random, n: int) -> Gf2Matrix:
    """A uniform random symmetric n x n matrix (diagonal included)."""
    rows = [0] * n
    for i in range(n):
        bits = rng.getrandbits(n - i) << i if n - i else 0
        rows[i] |= bits
        upper = bits >> (i + 1) << (i + 1)
        while upper:
            j = (upper & -upper).bit_length() - 1
            rows[j] |= 1 << i
            upper &= upper - 1
    return Gf2Matrix.from_row_ints(rows, n)
