"""Pure-Python kernels over packed 64-bit words.

Fallback for environments without the compiled extension; also the
reference the extension is benchmarked against.  Rows are converted to
arbitrary-precision ints so row updates are single xor operations.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def _row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(row.astype("<u8", copy=False).tobytes(), "little")


def _int_to_row(value: int, n_words: int) -> np.ndarray:
    return np.frombuffer(value.to_bytes(n_words * 8, "little"), dtype="<u8")


def rref(words: np.ndarray, n_rows: int, n_pivot_cols: int) -> list[int]:
    """Reduce ``words`` (shape rows x words) in place to reduced row echelon form.

    Pivots are chosen leftmost-first among bit columns [0, n_pivot_cols);
    the whole row, including any columns beyond the pivot range, is xored.
    Returns the pivot columns in order; pivot i lives in row i.
    """
    if n_rows == 0 or n_pivot_cols == 0:
        return []
    n_words = words.shape[1]
    rows = [_row_to_int(words[r]) for r in range(n_rows)]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        mask = 1 << col
        piv = -1
        for r in range(pivot_row, n_rows):
            if rows[r] & mask:
                piv = r
                break
        if piv < 0:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        prow = rows[pivot_row]
        for r in range(n_rows):
            if r != pivot_row and rows[r] & mask:
                rows[r] ^= prow
        pivots.append(col)
        pivot_row += 1
        if pivot_row == n_rows:
            break
    for r in range(n_rows):
        words[r] = _int_to_row(rows[r], n_words)
    return pivots


def matvec_into(mat_words: np.ndarray, x_words: np.ndarray, out_words: np.ndarray,
                n_rows: int) -> None:
    """Write the matrix-vector product bits (parity of row AND x) into out_words."""
    x = _row_to_int(x_words)
    res = 0
    for r in range(n_rows):
        if (_row_to_int(mat_words[r]) & x).bit_count() & 1:
            res |= 1 << r
    if out_words.size:
        out_words[:] = _int_to_row(res, out_words.size)


def exhaustive_count(row_masks: np.ndarray, n_rows: int, rhs_bits: int,
                     n_cols: int) -> int:
    """Count candidate vectors x in [0, 2^n_cols) with A x = rhs, by enumeration.

    Each entry of ``row_masks`` holds one full matrix row (n_cols <= 64 bits);
    ``rhs_bits`` packs the target with bit r for row r (n_rows <= 64).
    Candidates are visited in Gray-code order so each step updates the product
    by a single column xor.
    """
    if n_cols > 30:
        raise ValueError("exhaustive enumeration capped at 30 columns")
    if n_rows > 64:
        raise ValueError("exhaustive enumeration needs n_rows <= 64")
    cols = [0] * max(n_cols, 1)
    for r in range(n_rows):
        m = int(row_masks[r])
        bit = 1 << r
        while m:
            cols[(m & -m).bit_length() - 1] |= bit
            m &= m - 1
    cur = rhs_bits
    count = 1 if cur == 0 else 0
    for i in range(1, 1 << n_cols):
        cur ^= cols[(i & -i).bit_length() - 1]
        if cur == 0:
            count += 1
    return count
