"""Integer sequences attached to graded algebras, and their shape tests."""

from __future__ import annotations

from math import comb


class _IntSequence:
    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("empty sequence")
        if any(x < 0 for x in entries):
            raise ValueError("entries must be non-negative")
        self.entries = entries

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, _IntSequence):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}{self.entries}"


class HVector(_IntSequence):
    """Graded dimension sequence (h_0, ..., h_e)."""


class SocleVector(_IntSequence):
    """Socle dimension sequence (s_0, ..., s_e); its sum is the type."""

    @property
    def type(self) -> int:
        return sum(self.entries)


def macaulay_bound(value: int, d: int) -> int:
    """Largest admissible next entry after `value` in degree d.

    Writes value = C(a_d,d) + C(a_{d-1},d-1) + ... + C(a_j,j) (the unique
    expansion with a_d > a_{d-1} > ... >= j >= 1) and bumps every binomial
    to C(a+1, i+1).  Zero maps to zero.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if value < 0:
        raise ValueError("value must be non-negative")
    rem, j, out = value, d, 0
    while rem > 0:
        a = j
        while comb(a + 1, j) <= rem:
            a += 1
        out += comb(a + 1, j + 1)
        rem -= comb(a, j)
        j -= 1
    return out


def is_o_sequence(h) -> bool:
    """Growth test: h_0 = 1 and each h_{d+1} within the binomial bound from h_d."""
    entries = [int(x) for x in h]
    if not entries or entries[0] != 1 or any(x < 0 for x in entries):
        return False
    return all(
        entries[d + 1] <= macaulay_bound(entries[d], d) for d in range(1, len(entries) - 1)
    )


def is_unimodal(h) -> bool:
    """True when the sequence never strictly rises after a strict fall."""
    fallen = False
    entries = list(h)
    for prev, nxt in zip(entries, entries[1:]):
        if nxt > prev and fallen:
            return False
        if nxt < prev:
            fallen = True
    return True
