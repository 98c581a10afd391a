"""Exact coefficient fields: the rationals, and prime fields of word size."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 2**31 - 1  # Mersenne; ample headroom for any desk-scale socle degree

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Scalar field for all exact arithmetic.

    Rational scalars are `fractions.Fraction`; prime-field scalars are ints
    kept in canonical form in [0, modulus).
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "prime":
            if self.modulus is None or not _is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def prime(cls, modulus: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls("prime", modulus)

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        """Parse 'q' (rationals) or 'p:MODULUS' (prime field)."""
        if label == "q":
            return cls.rationals()
        if label.startswith("p:"):
            try:
                modulus = int(label[2:])
            except ValueError:
                raise ValueError(f"bad field label {label!r}") from None
            return cls.prime(modulus)
        raise ValueError(f"bad field label {label!r} (expected 'q' or 'p:PRIME')")

    def label(self) -> str:
        return "q" if self.kind == "rationals" else f"p:{self.modulus}"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    @property
    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def normalize(self, value):
        """Coerce an int or Fraction into canonical scalar form.

        In prime mode a rational coefficient is reduced mod p; a denominator
        divisible by p raises ZeroDivisionError.
        """
        if self.is_prime_field:
            p = self.modulus
            if isinstance(value, Fraction):
                den = value.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
                return value.numerator * pow(den, -1, p) % p
            return int(value) % p
        if isinstance(value, Fraction):
            return value
        return Fraction(value)

    def from_fraction(self, numerator: int, denominator: int = 1):
        return self.normalize(Fraction(numerator, denominator))

    def from_int(self, n: int):
        return n % self.modulus if self.is_prime_field else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.modulus if self.is_prime_field else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.is_prime_field else a - b

    def mul(self, a, b):
        return a * b % self.modulus if self.is_prime_field else a * b

    def neg(self, a):
        return -a % self.modulus if self.is_prime_field else -a

    def inv(self, a):
        if self.is_prime_field:
            return pow(a, -1, self.modulus)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def random_scalar(self, rng):
        """Uniform residue mod p; in rational mode a uniform integer below 2^31 - 1."""
        if self.is_prime_field:
            return rng.randrange(self.modulus)
        return Fraction(rng.randrange(DEFAULT_PRIME))

    def format_scalar(self, a) -> str:
        return str(a)
