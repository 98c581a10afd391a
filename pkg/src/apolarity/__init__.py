"""Exact computation with Macaulay inverse systems.

A graded artinian algebra can be presented dually by a finite list of
homogeneous forms; differentiating the forms recovers the algebra's graded
data.  This package computes Hilbert functions, socle vectors, level and
unimodality checks, weak Lefschetz rank probes with theorem-backed failure
certificates, and a collection of explicit module constructions, all in
exact arithmetic (rational numbers or a word-sized prime field).
"""

from .constructions import (
    BettiDegreeTable,
    MembershipWitness,
    PointsParameters,
    betti_degree_table,
    extend_codimension,
    family_membership,
    lex_segment_module,
    nonunimodal_module,
    points_parameters,
    sample_family_member,
    specimen_module,
    target_h_vector,
    verify_points_identity,
)
from .errors import (
    ApolarityError,
    DegenerateRandomness,
    DimensionMismatch,
    IdentityViolation,
    SystemFormatError,
    UnsafeFieldError,
)
from .fields import DEFAULT_PRIME, FieldSpec
from .hilbert import HVector, SocleVector, is_o_sequence, is_unimodal, macaulay_bound
from .lefschetz import (
    WlpCertificate,
    WlpReport,
    WlpVerdict,
    certify_wlp_failure,
    multiplication_rank,
    wlp_probe,
)
from .linalg import kernel_basis, rank, rref
from .monomials import lex_compare, monomials_of_degree
from .polynomials import Polynomial, RingContext, contract
from .sysfile import emit_system, parse_system
from .systems import (
    InverseSystem,
    annihilator_component,
    component_basis,
    component_dimension,
    h_vector,
    h_vector_monomial_oracle,
    is_level,
    redundant_generator_indices,
    socle_vector,
)

__version__ = "0.1.0"

__all__ = [
    "ApolarityError",
    "BettiDegreeTable",
    "DEFAULT_PRIME",
    "DegenerateRandomness",
    "DimensionMismatch",
    "FieldSpec",
    "HVector",
    "IdentityViolation",
    "InverseSystem",
    "MembershipWitness",
    "PointsParameters",
    "Polynomial",
    "RingContext",
    "SocleVector",
    "SystemFormatError",
    "UnsafeFieldError",
    "WlpCertificate",
    "WlpReport",
    "WlpVerdict",
    "annihilator_component",
    "betti_degree_table",
    "certify_wlp_failure",
    "component_basis",
    "component_dimension",
    "contract",
    "emit_system",
    "extend_codimension",
    "family_membership",
    "h_vector",
    "h_vector_monomial_oracle",
    "is_level",
    "is_o_sequence",
    "is_unimodal",
    "kernel_basis",
    "lex_compare",
    "lex_segment_module",
    "macaulay_bound",
    "monomials_of_degree",
    "multiplication_rank",
    "nonunimodal_module",
    "parse_system",
    "points_parameters",
    "rank",
    "redundant_generator_indices",
    "rref",
    "sample_family_member",
    "socle_vector",
    "specimen_module",
    "target_h_vector",
    "verify_points_identity",
    "wlp_probe",
]
