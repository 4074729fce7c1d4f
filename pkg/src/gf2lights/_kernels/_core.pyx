# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over packed 64-bit words (hot loops of the toolkit)."""

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define GF2_POPCLL(x) __builtin_popcountll(x)
    #else
    static int GF2_POPCLL(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int GF2_POPCLL(unsigned long long) nogil

BACKEND_NAME = "compiled"


def rref(unsigned long long[:, ::1] words, Py_ssize_t n_rows,
         Py_ssize_t n_pivot_cols):
    """In-place reduced row echelon form; returns the pivot column list.

    Pivots are chosen leftmost-first among bit columns [0, n_pivot_cols);
    rows are xored across their full width.
    """
    cdef Py_ssize_t n_words, pivot_row, col, r, w, piv, wi
    cdef unsigned long long bit, tmp
    if n_rows == 0 or n_pivot_cols == 0:
        return []
    n_words = words.shape[1]
    pivots = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        wi = col >> 6
        bit = (<unsigned long long>1) << (col & 63)
        piv = -1
        for r in range(pivot_row, n_rows):
            if words[r, wi] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pivot_row:
            for w in range(n_words):
                tmp = words[pivot_row, w]
                words[pivot_row, w] = words[piv, w]
                words[piv, w] = tmp
        for r in range(n_rows):
            if r != pivot_row and (words[r, wi] & bit):
                for w in range(n_words):
                    words[r, w] ^= words[pivot_row, w]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return pivots


def matvec_into(unsigned long long[:, ::1] mat_words,
                unsigned long long[::1] x_words,
                unsigned long long[::1] out_words, Py_ssize_t n_rows):
    """Write the matrix-vector product bits (parity of row AND x) into out_words."""
    cdef Py_ssize_t n_words = mat_words.shape[1]
    cdef Py_ssize_t r, w
    cdef int parity
    for w in range(out_words.shape[0]):
        out_words[w] = 0
    for r in range(n_rows):
        parity = 0
        for w in range(n_words):
            parity ^= GF2_POPCLL(mat_words[r, w] & x_words[w]) & 1
        if parity:
            out_words[r >> 6] |= (<unsigned long long>1) << (r & 63)


def exhaustive_count(unsigned long long[::1] row_masks, Py_ssize_t n_rows,
                     unsigned long long rhs_bits, int n_cols):
    """Count candidate vectors x in [0, 2^n_cols) with A x = rhs, by enumeration.

    Straight brute force: every candidate is tested row by row (with early
    exit on the first mismatched row).
    """
    cdef unsigned long long x, limit, count
    cdef Py_ssize_t r
    cdef int ok
    if n_cols > 30:
        raise ValueError("exhaustive enumeration capped at 30 columns")
    if n_rows > 64:
        raise ValueError("exhaustive enumeration needs n_rows <= 64")
    limit = (<unsigned long long>1) << n_cols
    count = 0
    with nogil:
        x = 0
        while x < limit:
            ok = 1
            for r in range(n_rows):
                if (GF2_POPCLL(row_masks[r] & x) & 1) != <int>((rhs_bits >> r) & 1):
                    ok = 0
                    break
            count += ok
            x += 1
    return count
