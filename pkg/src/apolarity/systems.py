"""Inverse systems and the graded data of their apolar quotients.

An inverse system is a finite list of homogeneous forms; together with all
their iterated derivatives the forms span a graded module whose degree-d
dimensions form the Hilbert function of the associated artinian algebra.
Everything here reduces to exact rank computations on derivative matrices.
"""

from __future__ import annotations

from . import monomials
from .errors import UnsafeFieldError
from .hilbert import HVector, SocleVector
from .linalg import ExactMatrix
from .polynomials import Polynomial, contract_monomial


class InverseSystem:
    """A finitely generated submodule of the dual ring, via homogeneous generators."""

    __slots__ = ("ring", "generators", "socle_degree")

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise ValueError("an inverse system needs at least one generator")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("generators live over different rings")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
        self.ring = ring
        self.generators = gens
        self.socle_degree = max(g.degree() for g in gens)

    @classmethod
    def from_monomials(cls, ring, exponent_tuples) -> "InverseSystem":
        return cls([Polynomial.monomial(ring, m) for m in exponent_tuples])

    def __eq__(self, other):
        if not isinstance(other, InverseSystem):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"InverseSystem<{gens}>"


def _check_safe_field(system: InverseSystem) -> None:
    field = system.ring.field
    if field.is_prime_field and field.modulus <= system.socle_degree:
        raise UnsafeFieldError(
            f"modulus {field.modulus} must exceed the socle degree {system.socle_degree}"
        )


def _span_entries(ring, forms, d: int, include_generators_at_d: bool = True):
    """Sparse entries of the matrix whose row space is the degree-d span of
    all monomial derivatives of `forms`.

    With include_generators_at_d=False, degree-d forms themselves are left
    out, leaving exactly the image of the degree-(d+1) component under the
    variables.
    """
    cols = monomials.monomials_of_degree(ring.num_vars, d)
    index = {m: j for j, m in enumerate(cols)}
    field = ring.field
    entries = []
    nrows = 0
    for g in forms:
        k = g.degree() - d
        if k < 0 or (k == 0 and not include_generators_at_d):
            continue
        for op in monomials.monomials_of_degree(ring.num_vars, k):
            row = contract_monomial(op, g.terms, field)
            if row:
                entries.extend((nrows, index[m], v) for m, v in row.items())
                nrows += 1
    return nrows, len(cols), entries


def _span_dimension(ring, forms, d: int, include_generators_at_d: bool = True) -> int:
    nrows, ncols, entries = _span_entries(ring, forms, d, include_generators_at_d)
    if nrows == 0:
        return 0
    return ExactMatrix.from_entries(ring.field, nrows, ncols, entries).rank()


def component_dimension(system: InverseSystem, d: int) -> int:
    """dim of the degree-d component of the module."""
    e = system.socle_degree
    if d < 0 or d > e:
        raise ValueError(f"degree {d} outside 0..{e}")
    _check_safe_field(system)
    return _span_dimension(system.ring, system.generators, d)


def component_basis(system: InverseSystem, d: int) -> list:
    """Canonical basis of the degree-d component.

    Rows of the reduced echelon form of the derivative matrix, so the basis
    is pivot-reduced and ordered by decreasing lex leading monomial.
    """
    e = system.socle_degree
    if d < 0 or d > e:
        raise ValueError(f"degree {d} outside 0..{e}")
    _check_safe_field(system)
    nrows, ncols, entries = _span_entries(system.ring, system.generators, d)
    if nrows == 0:
        return []
    rows, _ = ExactMatrix.from_entries(system.ring.field, nrows, ncols, entries).rref()
    cols = monomials.monomials_of_degree(system.ring.num_vars, d)
    return [
        Polynomial(system.ring, {cols[j]: v for j, v in enumerate(row) if v}) for row in rows
    ]


def h_vector(system: InverseSystem) -> HVector:
    """Hilbert function of the apolar quotient: h_d = dim of the degree-d component."""
    _check_safe_field(system)
    return HVector(
        _span_dimension(system.ring, system.generators, d)
        for d in range(system.socle_degree + 1)
    )


def h_vector_monomial_oracle(system: InverseSystem) -> HVector:
    """Combinatorial Hilbert function for monomial systems.

    Counts, per degree, the distinct monomial divisors of the generators; no
    linear algebra is involved, which makes this an independent cross-check
    of `h_vector` on its domain.
    """
    exps = []
    for g in system.generators:
        if len(g.terms) != 1:
            raise ValueError("the monomial oracle requires monomial generators")
        exps.append(next(iter(g.terms)))
    out = []
    for d in range(system.socle_degree + 1):
        seen = set()
        for m in exps:
            seen.update(monomials.divisors_of_degree(m, d))
        out.append(len(seen))
    return HVector(out)


def annihilator_component(system: InverseSystem, d: int) -> list:
    """Basis of the degree-d operators annihilating every generator."""
    e = system.socle_degree
    if d < 0 or d > e + 1:
        raise ValueError(f"degree {d} outside 0..{e + 1}")
    _check_safe_field(system)
    r = system.ring.num_vars
    field = system.ring.field
    ops = monomials.monomials_of_degree(r, d)
    entries = []
    row_base = 0
    for g in system.generators:
        k = g.degree() - d
        if k < 0:
            continue
        target_index = {m: i for i, m in enumerate(monomials.monomials_of_degree(r, k))}
        for j, op in enumerate(ops):
            for m, v in contract_monomial(op, g.terms, field).items():
                entries.append((row_base + target_index[m], j, v))
        row_base += len(target_index)
    mat = ExactMatrix.from_entries(field, row_base, len(ops), entries)
    return [
        Polynomial(system.ring, {ops[j]: v for j, v in enumerate(vec) if v})
        for vec in mat.kernel()
    ]


def socle_vector(system: InverseSystem) -> SocleVector:
    """Socle dimensions: s_d = dim M_d - dim(R_1 applied to M_{d+1}), s_e = dim M_e.

    Equivalently, s_d counts minimal module generators in degree d, so only
    degrees carrying a listed generator can contribute below the top.
    """
    _check_safe_field(system)
    e = system.socle_degree
    listed = {g.degree() for g in system.generators}
    out = []
    for d in range(e):
        if d not in listed:
            out.append(0)
            continue
        full = _span_dimension(system.ring, system.generators, d)
        derived = _span_dimension(system.ring, system.generators, d, False)
        out.append(full - derived)
    out.append(_span_dimension(system.ring, system.generators, e))
    return SocleVector(out)


def is_level(system: InverseSystem):
    """(True, t) when the socle is concentrated in the top degree, with t = s_e."""
    s = socle_vector(system)
    return all(x == 0 for x in s.entries[:-1]), s.entries[-1]


def redundant_generator_indices(system: InverseSystem) -> list:
    """Diagnostic: indices of listed generators already generated by the others.

    Levelness and type are intrinsic to the module, so redundant entries are
    harmless, but a non-minimal list usually signals an input mistake.
    """
    _check_safe_field(system)
    out = []
    for i, g in enumerate(system.generators):
        others = [x for j, x in enumerate(system.generators) if j != i]
        if not others:
            continue
        d = g.degree()
        nrows, ncols, entries = _span_entries(system.ring, others, d)
        base = ExactMatrix.from_entries(system.ring.field, nrows, ncols, entries)
        cols = monomials.monomials_of_degree(system.ring.num_vars, d)
        index = {m: j for j, m in enumerate(cols)}
        extended = entries + [(nrows, index[m], v) for m, v in g.terms.items()]
        with_g = ExactMatrix.from_entries(system.ring.field, nrows + 1, ncols, extended)
        if base.rank() == with_g.rank():
            out.append(i)
    return out
