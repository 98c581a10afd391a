# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan kernels for word-sized prime fields.

Entries are int64 residues in [0, p) with p < 2^31, so every intermediate
product fits in int64.  `apolarity._modp_py` is the drop-in fallback.
"""


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a in (0, p)
    cdef long long old_r = a, r = p, old_s = 1, s = 0, q, t
    while r != 0:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    if old_s < 0:
        old_s += p
    return old_s


def ref_pivots(long long[:, ::1] a, long long p):
    """Forward elimination to row echelon form with unit pivots, in place.

    Scans columns left to right, picks the first row with a nonzero entry,
    and clears everything below.  Returns the pivot columns.
    """
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, f, v
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        i = -1
        for j in range(r, rows):
            if a[j, c] != 0:
                i = j
                break
        if i == -1:
            continue
        if i != r:
            for k in range(c, cols):
                v = a[i, k]
                a[i, k] = a[r, k]
                a[r, k] = v
        if a[r, c] != 1:
            inv = _inv_mod(a[r, c], p)
            for k in range(c, cols):
                a[r, k] = (a[r, k] * inv) % p
        for j in range(r + 1, rows):
            f = a[j, c]
            if f == 0:
                continue
            a[j, c] = 0
            for k in range(c + 1, cols):
                v = (a[j, k] - f * a[r, k]) % p
                if v < 0:
                    v += p
                a[j, k] = v
        pivots.append(c)
        r += 1
    return pivots


def rref_pivots(long long[:, ::1] a, long long p):
    """Gauss-Jordan to reduced row echelon form, in place; returns pivot columns."""
    pivots = ref_pivots(a, p)
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t idx, c, j, k
    cdef long long f, v
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        for j in range(idx):
            f = a[j, c]
            if f == 0:
                continue
            a[j, c] = 0
            for k in range(c + 1, cols):
                v = (a[j, k] - f * a[idx, k]) % p
                if v < 0:
                    v += p
                a[j, k] = v
    return pivots
