"""Vectorized numpy fallback for the mod-p elimination kernels.

Semantics mirror `_modp_core` exactly (same pivot rule, same in-place
updates), so both backends produce identical echelon forms.
"""

from __future__ import annotations

import numpy as np


def ref_pivots(a: np.ndarray, p: int) -> list:
    """Forward elimination to row echelon form with unit pivots, in place.

    Scans columns left to right, picks the first row with a nonzero entry,
    and clears everything below.  Returns the pivot columns.
    """
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        v = int(a[r, c])
        if v != 1:
            a[r, c:] = (a[r, c:] * pow(v, -1, p)) % p
        below = a[r + 1 :, c:]
        f = below[:, 0]
        nzr = np.flatnonzero(f)
        if nzr.size:
            below[nzr] = (below[nzr] - f[nzr, None] * a[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_pivots(a: np.ndarray, p: int) -> list:
    """Gauss-Jordan to reduced row echelon form, in place; returns pivot columns."""
    pivots = ref_pivots(a, p)
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        f = a[:idx, c]
        nz = np.flatnonzero(f)
        if nz.size:
            a[nz, c:] = (a[nz, c:] - f[nz, None] * a[idx, c:][None, :]) % p
    return pivots
