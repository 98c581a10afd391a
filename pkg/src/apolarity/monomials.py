"""Monomials as bare exponent tuples, ordered by degree and then lex."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import DimensionMismatch


def degree(m) -> int:
    return sum(m)


def lex_compare(a, b) -> int:
    """Compare two monomials; returns -1, 0 or 1.

    Different total degrees compare by degree; equal degrees compare by the
    first nonzero exponent difference (positive means greater).
    """
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials over {len(a)} and {len(b)} variables")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def sort_key(m):
    """Key ordering monomials ascending in degree-lex."""
    return (sum(m), tuple(m))


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, d: int) -> tuple:
    """All exponent tuples of total degree d, strictly decreasing in lex.

    There are C(d + num_vars - 1, num_vars - 1) of them.
    """
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")
    if num_vars == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        out.extend((a, *rest) for rest in monomials_of_degree(num_vars - 1, d - a))
    return tuple(out)


def space_dimension(num_vars: int, d: int) -> int:
    """Dimension of the degree-d piece of a polynomial ring."""
    return comb(d + num_vars - 1, num_vars - 1) if d >= 0 else 0


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def div(b, a) -> tuple:
    """Exponentwise difference b - a; the caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def divisors_of_degree(m, d: int) -> list:
    """Degree-d monomial divisors of m, in decreasing lex order."""
    if d < 0 or d > sum(m):
        return []
    out = []

    def rec(i, remaining, prefix):
        if i == len(m) - 1:
            if remaining <= m[i]:
                out.append((*prefix, remaining))
            return
        for a in range(min(m[i], remaining), -1, -1):
            rec(i + 1, remaining - a, (*prefix, a))

    rec(0, d, ())
    return out
