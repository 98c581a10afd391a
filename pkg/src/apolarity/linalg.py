"""Exact dense rank, kernel and reduced-echelon computations.

Prime-field matrices are int64 numpy arrays reduced by Gauss-Jordan
elimination; the compiled core (`_modp_core`, built from Cython) is selected
at import when available, with `_modp_py` as a drop-in vectorized fallback.
Set APOLARITY_PURE_PYTHON=1 to force the fallback.  Rational matrices go
through fraction-free (Bareiss) elimination on cleared-denominator integer
rows, so every division performed is exact.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

import numpy as np

from . import _modp_py
from .errors import IdentityViolation
from .fields import FieldSpec

_IMPLS = {"python": _modp_py}
try:
    from . import _modp_core

    _IMPLS["compiled"] = _modp_core
except ImportError:
    pass

if os.environ.get("APOLARITY_PURE_PYTHON"):
    _ACTIVE = "python"
else:
    _ACTIVE = "compiled" if "compiled" in _IMPLS else "python"
_modp = _IMPLS[_ACTIVE]


def available_backends() -> tuple:
    return tuple(sorted(_IMPLS))


def active_backend() -> str:
    return _ACTIVE


def use_backend(name: str) -> None:
    """Switch the mod-p elimination backend (for tests and benchmarks)."""
    global _modp, _ACTIVE
    if name not in _IMPLS:
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    _modp = _IMPLS[name]
    _ACTIVE = name


def _to_integer_rows(rows) -> list:
    """Scale each rational row to a primitive integer row (rank/kernel safe)."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            den = den * d // gcd(den, d)
        ints = [int(x * den) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _bareiss_ref(rows: list, num_cols: int) -> list:
    """Fraction-free forward elimination on integer rows, in place.

    Returns the pivot columns; every interior division is exact and checked.
    """
    pivots = []
    prev = 1
    r = 0
    nrows = len(rows)
    for c in range(num_cols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        pc = rows[r][c]
        top = rows[r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for k in range(c + 1, num_cols):
                q, rem = divmod(pc * ri[k] - f * top[k], prev)
                if rem:
                    raise IdentityViolation("fraction-free elimination lost exactness")
                ri[k] = q
            ri[c] = 0
        prev = pc
        pivots.append(c)
        r += 1
    return pivots


def _rref_q(rows, num_cols: int):
    """Exact reduced echelon form over the rationals.

    Bareiss forward pass on integer rows, then back-substitution with
    Fractions only on the rank x num_cols block.
    """
    ints = _to_integer_rows(rows)
    pivots = _bareiss_ref(ints, num_cols)
    rank = len(pivots)
    reduced = [[Fraction(v) for v in ints[i]] for i in range(rank)]
    for idx in range(rank - 1, -1, -1):
        c = pivots[idx]
        row = reduced[idx]
        lead = row[c]
        if lead != 1:
            row = [v / lead for v in row]
            reduced[idx] = row
        for j in range(idx):
            f = reduced[j][c]
            if f:
                reduced[j] = [x - f * y for x, y in zip(reduced[j], row)]
    return reduced, pivots


class ExactMatrix:
    """Dense matrix over a FieldSpec.

    Prime mode wraps an int64 array; rational mode keeps Fraction rows.
    Reductions first drop zero rows, scale each row to leading coefficient 1
    and deduplicate, which never changes the row space, the rank or the
    kernel but collapses the highly redundant derivative matrices.
    """

    __slots__ = ("field", "num_cols", "_data")

    def __init__(self, field: FieldSpec, num_cols: int, data):
        self.field = field
        self.num_cols = num_cols
        self._data = data

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, num_cols=None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if num_cols is None:
            if not rows:
                raise ValueError("num_cols is required for a matrix with no rows")
            num_cols = len(rows[0])
        if any(len(r) != num_cols for r in rows):
            raise ValueError("ragged matrix")
        norm = [[field.normalize(x) for x in row] for row in rows]
        if field.is_prime_field:
            a = np.array(norm, dtype=np.int64) if norm else np.zeros((0, num_cols), dtype=np.int64)
            return cls(field, num_cols, a.reshape(len(norm), num_cols))
        return cls(field, num_cols, norm)

    @classmethod
    def from_entries(cls, field: FieldSpec, num_rows: int, num_cols: int, entries) -> "ExactMatrix":
        """Build from (row, col, canonical scalar) triples; omitted entries are zero."""
        if field.is_prime_field:
            a = np.zeros((num_rows, num_cols), dtype=np.int64)
            if entries:
                ii = [t[0] for t in entries]
                jj = [t[1] for t in entries]
                vv = [int(t[2]) for t in entries]
                a[ii, jj] = vv
            return cls(field, num_cols, a)
        rows = [[Fraction(0)] * num_cols for _ in range(num_rows)]
        for i, j, v in entries:
            rows[i][j] = v if isinstance(v, Fraction) else Fraction(v)
        return cls(field, num_cols, rows)

    def _prepared_array(self) -> np.ndarray:
        a = self._data
        if a.shape[0] == 0:
            return a.copy()
        a = a[a.any(axis=1)]
        if a.shape[0] == 0:
            return a.copy()
        p = self.field.modulus
        lead_idx = (a != 0).argmax(axis=1)
        lead = a[np.arange(a.shape[0]), lead_idx]
        inv = np.array([pow(int(v), -1, p) for v in lead], dtype=np.int64)
        a = (a * inv[:, None]) % p
        return np.ascontiguousarray(np.unique(a, axis=0))

    def _prepared_rows(self) -> list:
        uniq = set()
        for row in self._data:
            lead = next((x for x in row if x), None)
            if lead is None:
                continue
            if lead != 1:
                row = [x / lead for x in row]
            uniq.add(tuple(row))
        return [list(t) for t in sorted(uniq)]

    def rank(self) -> int:
        if self.field.is_prime_field:
            a = self._prepared_array()
            return len(_modp.ref_pivots(a, self.field.modulus))
        rows = self._prepared_rows()
        ints = _to_integer_rows(rows)
        return len(_bareiss_ref(ints, self.num_cols))

    def rref(self):
        """Reduced row echelon form: (nonzero rows as scalar lists, pivot columns)."""
        if self.field.is_prime_field:
            a = self._prepared_array()
            pivots = _modp.rref_pivots(a, self.field.modulus)
            return [[int(x) for x in a[i]] for i in range(len(pivots))], pivots
        return _rref_q(self._prepared_rows(), self.num_cols)

    def kernel(self) -> list:
        """Basis of the right null space, one vector per free column."""
        rows, pivots = self.rref()
        field = self.field
        pivot_set = set(pivots)
        basis = []
        for fcol in range(self.num_cols):
            if fcol in pivot_set:
                continue
            v = [field.zero] * self.num_cols
            v[fcol] = field.one
            for i, pcol in enumerate(pivots):
                coef = rows[i][fcol]
                if coef:
                    v[pcol] = field.neg(coef)
            basis.append(v)
        return basis


def rank(rows, field: FieldSpec, num_cols=None) -> int:
    """Exact rank of a dense matrix over the given field."""
    return ExactMatrix.from_rows(field, rows, num_cols).rank()


def kernel_basis(rows, field: FieldSpec, num_cols=None) -> list:
    """Basis of the right null space; every vector satisfies mat . v = 0 exactly."""
    return ExactMatrix.from_rows(field, rows, num_cols).kernel()


def rref(rows, field: FieldSpec, num_cols=None):
    """Reduced row echelon form (nonzero rows only) and the pivot columns."""
    return ExactMatrix.from_rows(field, rows, num_cols).rref()
