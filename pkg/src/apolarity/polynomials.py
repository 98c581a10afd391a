"""Sparse multivariate forms with exact coefficients, and the apolarity action."""

from __future__ import annotations

from dataclasses import dataclass

from . import monomials
from .errors import DegenerateRandomness, DimensionMismatch, UnsafeFieldError
from .fields import FieldSpec


@dataclass(frozen=True)
class RingContext:
    """Ambient ring data: number of variables and coefficient field.

    One context serves both the operator ring (differentiation side) and the
    dual ring of forms; only printing distinguishes the variable letters.
    """

    num_vars: int
    field: FieldSpec

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")


class Polynomial:
    """A sparse form: map from exponent tuples to nonzero scalars.

    Instances are immutable by convention; every operation returns a new
    object, so values are safe to share.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms=()):
        field = ring.field
        tidy = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.num_vars:
                raise DimensionMismatch(
                    f"monomial {m} has {len(m)} exponents, ring has {ring.num_vars}"
                )
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = field.normalize(c)
            if m in tidy:
                c = field.add(tidy[m], c)
            if field.is_zero(c):
                tidy.pop(m, None)
            else:
                tidy[m] = c
        self.ring = ring
        self.terms = tidy

    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def monomial(cls, ring, exponents, coefficient=1) -> "Polynomial":
        return cls(ring, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, ring, index: int) -> "Polynomial":
        """The index-th variable (1-based)."""
        if not 1 <= index <= ring.num_vars:
            raise ValueError(f"variable index {index} outside 1..{ring.num_vars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(ring.num_vars))
        return cls(ring, {exps: 1})

    @classmethod
    def linear_form(cls, ring, coefficients) -> "Polynomial":
        coefficients = list(coefficients)
        if len(coefficients) != ring.num_vars:
            raise DimensionMismatch("one coefficient per variable required")
        terms = {}
        for i, c in enumerate(coefficients):
            exps = tuple(1 if j == i else 0 for j in range(ring.num_vars))
            terms[exps] = c
        return cls(ring, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree, or None for the zero form."""
        return max(map(sum, self.terms)) if self.terms else None

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def sorted_terms(self) -> list:
        """Terms in decreasing degree-lex order."""
        return sorted(self.terms.items(), key=lambda t: monomials.sort_key(t[0]), reverse=True)

    def leading_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=monomials.sort_key)

    def linear_coefficients(self) -> list:
        """Coefficient vector of a linear form."""
        if self.degree() not in (None, 1):
            raise ValueError("not a linear form")
        out = []
        for i in range(self.ring.num_vars):
            exps = tuple(1 if j == i else 0 for j in range(self.ring.num_vars))
            out.append(self.terms.get(exps, self.ring.field.zero))
        return out

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring:
            raise DimensionMismatch("sum over different rings")
        merged = dict(self.terms)
        field = self.ring.field
        for m, c in other.terms.items():
            v = field.add(merged.get(m, field.zero), c)
            if field.is_zero(v):
                merged.pop(m, None)
            else:
                merged[m] = v
        out = object.__new__(Polynomial)
        out.ring = self.ring
        out.terms = merged
        return out

    def __neg__(self):
        field = self.ring.field
        out = object.__new__(Polynomial)
        out.ring = self.ring
        out.terms = {m: field.neg(c) for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        field = self.ring.field
        if not isinstance(other, Polynomial):
            scalar = field.normalize(other)
            if field.is_zero(scalar):
                return Polynomial.zero(self.ring)
            out = object.__new__(Polynomial)
            out.ring = self.ring
            out.terms = {m: field.mul(c, scalar) for m, c in self.terms.items()}
            return out
        if self.ring != other.ring:
            raise DimensionMismatch("product over different rings")
        acc = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = monomials.mul(a, b)
                v = field.add(acc.get(m, field.zero), field.mul(ca, cb))
                if field.is_zero(v):
                    acc.pop(m, None)
                else:
                    acc[m] = v
        out = object.__new__(Polynomial)
        out.ring = self.ring
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(poly: Polynomial, letter: str = "y") -> str:
    """Canonical text form: terms in decreasing lex order, '*'-joined factors."""
    if poly.is_zero():
        return "0"
    field = poly.ring.field
    pieces = []
    for m, c in poly.sorted_terms():
        negative = False
        if not field.is_prime_field and c < 0:
            negative = True
            c = -c
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"{letter}{i + 1}")
            elif e > 1:
                factors.append(f"{letter}{i + 1}^{e}")
        if not factors:
            body = field.format_scalar(c)
        elif c == field.one:
            body = "*".join(factors)
        else:
            body = "*".join([field.format_scalar(c), *factors])
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def _falling_product(b, a) -> int:
    """Product of falling factorials prod_i b_i (b_i - 1) ... (b_i - a_i + 1)."""
    out = 1
    for bot, drop in zip(b, a):
        for t in range(bot, bot - drop, -1):
            out *= t
    return out


def contract_monomial(exps, poly_terms: dict, field: FieldSpec) -> dict:
    """Apply the operator monomial x^exps to a term dict, returning a term dict."""
    out = {}
    for b, c in poly_terms.items():
        if monomials.divides(exps, b):
            v = field.mul(c, field.from_int(_falling_product(b, exps)))
            if not field.is_zero(v):
                out[monomials.div(b, exps)] = v
    return out


def contract(theta: Polynomial, target: Polynomial) -> Polynomial:
    """Differentiation pairing: x^a sends y^b to (prod_i b_i!/(b_i - a_i)!) y^(b-a).

    Extended bilinearly; the result is zero whenever some exponent of a
    exceeds the matching exponent of b.  In prime mode the modulus must
    exceed deg(target) so that no factorial coefficient vanishes.
    """
    if theta.ring != target.ring:
        raise DimensionMismatch("operator and target live over different rings")
    field = theta.ring.field
    d = target.degree()
    if field.is_prime_field and d is not None and field.modulus <= d:
        raise UnsafeFieldError(
            f"modulus {field.modulus} must exceed the degree {d} being differentiated"
        )
    acc = {}
    for a, ca in theta.terms.items():
        for m, v in contract_monomial(a, target.terms, field).items():
            w = field.add(acc.get(m, field.zero), field.mul(ca, v))
            if field.is_zero(w):
                acc.pop(m, None)
            else:
                acc[m] = w
    out = object.__new__(Polynomial)
    out.ring = theta.ring
    out.terms = acc
    return out


def random_linear_form(ring: RingContext, rng, max_attempts: int = 32) -> Polynomial:
    """Draw a nonzero linear form with uniform coefficients, resampling zero draws."""
    field = ring.field
    for _ in range(max_attempts):
        coeffs = [field.random_scalar(rng) for _ in range(ring.num_vars)]
        if any(not field.is_zero(c) for c in coeffs):
            return Polynomial.linear_form(ring, coeffs)
    raise DegenerateRandomness(f"drew {max_attempts} zero linear forms in a row")
