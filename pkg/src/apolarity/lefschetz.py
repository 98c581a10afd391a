"""Weak Lefschetz probes: exact ranks of multiplication by a linear form.

The rank of multiplication A_i -> A_{i+1} by a linear form l equals the
degree-i dimension of the inverse system generated by the l-derivatives of
the generators, so no quotient bases are ever built.  Failure is only ever
*certified* through the classification of type-two top-socle modules whose
Hilbert function matches the extremal profile; randomized misses alone are
reported as probabilistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .constructions import target_h_vector
from .errors import IdentityViolation
from .hilbert import HVector
from .polynomials import Polynomial, contract, random_linear_form
from .seeding import derive_rng
from .systems import InverseSystem, _check_safe_field, _span_dimension, h_vector, is_level


class WlpVerdict(str, Enum):
    HOLDS_WITNESSED = "HoldsWitnessed"
    FAILS_CERTIFIED = "FailsCertified"
    FAILS_PROBABILISTIC = "FailsProbabilistic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DegreeEvidence:
    """Best observed multiplication rank into degree+1, against its target."""

    degree: int
    target: int
    best_rank: int
    trials_used: int


@dataclass(frozen=True)
class TrialRecord:
    """Per-trial outcome: the drawn form, its ranks and the degrees it missed."""

    index: int
    coefficients: tuple
    ranks: tuple
    missed_degrees: tuple


@dataclass(frozen=True)
class WlpCertificate:
    """Hypotheses under which failure holds for every linear form.

    A type-two module generated in top degree e whose Hilbert function is the
    extremal profile cannot multiply injectively through the plateau where
    h = e + 2, provided the plateau has length at least two (odd e >= 9 or
    even e >= 12).
    """

    socle_degree: int
    plateau_degrees: tuple
    forced_degree: int
    clause: str


@dataclass(frozen=True)
class WlpReport:
    h: HVector
    per_degree: tuple
    verdict: WlpVerdict
    witness: tuple | None
    certificate: WlpCertificate | None
    seed: int
    trials: int
    trial_log: tuple


def multiplication_rank(system: InverseSystem, l: Polynomial, i: int) -> int:
    """Exact rank of multiplication by l from degree i to degree i+1.

    Computed as the degree-i dimension of the system generated by the
    l-derivatives of the generators; always at most min(h_i, h_{i+1}).
    """
    if l.is_zero() or l.degree() != 1:
        raise ValueError("the multiplier must be a nonzero linear form")
    e = system.socle_degree
    if i < 0 or i > e - 1:
        raise ValueError(f"degree {i} outside 0..{e - 1}")
    _check_safe_field(system)
    contracted = [contract(l, g) for g in system.generators]
    forms = [f for f in contracted if not f.is_zero()]
    if not forms:
        return 0
    return _span_dimension(system.ring, forms, i)


def certify_wlp_failure(system: InverseSystem) -> WlpCertificate | None:
    """Certificate that no linear form can have maximal rank everywhere, or None.

    Applies when the module is level of type two with socle degree e, its
    Hilbert function equals the extremal profile min(2d+1, e+2, 3(e-d)+2),
    and e is odd with e >= 9 or even with e >= 12.  The profile then takes
    the value e+2 in at least two consecutive degrees, and multiplication
    into the second plateau degree always has a kernel.
    """
    e = system.socle_degree
    odd_ok = e % 2 == 1 and e >= 9
    even_ok = e % 2 == 0 and e >= 12
    if not (odd_ok or even_ok):
        return None
    level, t = is_level(system)
    if not level or t != 2:
        return None
    h = h_vector(system)
    if h != target_h_vector(e):
        return None
    plateau = tuple(d for d in range(e + 1) if h[d] == e + 2)
    if len(plateau) < 2:
        return None
    forced = next(d for d in plateau if d + 1 in plateau)
    clause = "odd socle degree >= 9" if odd_ok else "even socle degree >= 12"
    return WlpCertificate(e, plateau, forced, clause)


def wlp_probe(system: InverseSystem, trials: int, seed: int = 0) -> WlpReport:
    """Randomized weak Lefschetz test with deterministic per-trial seeds.

    Draws `trials` linear forms; a single form reaching every target rank
    gives HoldsWitnessed.  Otherwise a certificate, when available, gives
    FailsCertified; a degree that no trial could fill gives
    FailsProbabilistic; scattered misses alone are Inconclusive.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    _check_safe_field(system)
    e = system.socle_degree
    h = h_vector(system)
    targets = [min(h[i], h[i + 1]) for i in range(e)]
    best = [0] * e
    log = []
    witness = None
    for t in range(trials):
        rng = derive_rng(seed, "wlp-trial", t)
        l = random_linear_form(system.ring, rng)
        contracted = [contract(l, g) for g in system.generators]
        forms = [f for f in contracted if not f.is_zero()]
        ranks = []
        for i in range(e):
            r = _span_dimension(system.ring, forms, i) if forms else 0
            if r > targets[i]:
                raise IdentityViolation("multiplication rank exceeded its ceiling")
            ranks.append(r)
            if r > best[i]:
                best[i] = r
        missed = tuple(i for i in range(e) if ranks[i] < targets[i])
        log.append(TrialRecord(t, tuple(l.linear_coefficients()), tuple(ranks), missed))
        if not missed and witness is None:
            witness = tuple(l.linear_coefficients())
    per_degree = tuple(
        DegreeEvidence(i, targets[i], best[i], trials) for i in range(e)
    )
    certificate = certify_wlp_failure(system)
    if witness is not None:
        if certificate is not None:
            raise IdentityViolation("a certified failure produced a witness")
        verdict = WlpVerdict.HOLDS_WITNESSED
        certificate = None
    elif certificate is not None:
        verdict = WlpVerdict.FAILS_CERTIFIED
    elif any(best[i] < targets[i] for i in range(e)):
        verdict = WlpVerdict.FAILS_PROBABILISTIC
    else:
        verdict = WlpVerdict.INCONCLUSIVE
    return WlpReport(
        h=h,
        per_degree=per_degree,
        verdict=verdict,
        witness=witness,
        certificate=certificate,
        seed=seed,
        trials=trials,
        trial_log=tuple(log),
    )
