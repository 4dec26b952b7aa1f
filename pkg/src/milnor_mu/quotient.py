"""Classification of the antipodal quotients M_h/tau_h.

``tau_h`` is the fiberwise antipodal involution on the sphere bundle M_h.
When M_h is diffeomorphic to S^7 the quotient is a smooth manifold that can
only be RP^7 or RP^7 # 14 M_2 (fourteen copies of the generating exotic
sphere summed on), and the two are told apart by the Eells-Kuiper
mu-invariant: mu(RP^7) = +/- 1/32 while mu(RP^7 # 14 M_2) = +/- 1/32 + 1/2.

mu of the quotient is evaluated by localizing at the fixed S^4 of the
extended involution on the disk bundle.  The fixed-point data consists of a
spinor-index contribution A_1 = +/- (2h-1)/16, a signature-type contribution
A_2 = 1 (the Euler number of the normal bundle of the fixed sphere), and the
equivariant signature 1.  Assembled with half the bounding-manifold term of
the covering sphere, these give

    mu(M_h/tau_h) = h(h-1)/112 +/- (2h-1)/32   (mod 1),

where the one orientation sign is inherited from A_1.  Both the closed form
and the term-by-term assembly are computed and compared on every call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bundles import (
    DerivationMismatch,
    MilnorBundle,
    characteristic_data,
    disk_bundle_invariants,
    is_diffeo_s7,
)
from .qz import AmbiguousResidue, add_ambiguous, ambiguous, reduce_mod_z


class NotDiffeoS7Error(ValueError):
    """The quotient formula is only asserted for M_h diffeomorphic to S^7."""


class DichotomyViolationError(RuntimeError):
    """mu of a quotient matched neither admissible value set.

    The two-manifold dichotomy makes this impossible for a correct
    implementation, so this error always signals a bug, never bad input.
    """


#: mu value set of RP^7: {1/32, 31/32}.
MU_RP7 = AmbiguousResidue.of(
    reduce_mod_z(Fraction(1, 32)), reduce_mod_z(Fraction(31, 32))
)

#: mu value set of RP^7 # 14 M_2: {15/32, 17/32}, i.e. +/- 1/32 shifted by 1/2.
MU_RP7_SUM_14M2 = AmbiguousResidue.of(
    reduce_mod_z(Fraction(15, 32)), reduce_mod_z(Fraction(17, 32))
)


class Verdict(enum.Enum):
    REAL_PROJECTIVE_7 = "RP7"
    REAL_PROJECTIVE_7_SUM_14M2 = "RP7#14M2"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class FixedPointContributions:
    """Rational data localized at the fixed S^4 of the involution.

    ``a1_magnitude`` is |2h-1|/16 with the orientation sign left ambiguous;
    ``a2`` and ``equivariant_signature`` are identically 1 across the family.
    """

    a1_magnitude: Fraction
    a2: Fraction
    equivariant_signature: int

    def __post_init__(self) -> None:
        if self.a1_magnitude < 0:
            raise ValueError("a1 is recorded as a non-negative magnitude")
        if self.a2 != 1:
            raise ValueError("A_2 is the Euler number of the normal bundle, always 1")
        if self.equivariant_signature != 1:
            raise ValueError("the equivariant signature is 1 across the family")

    @property
    def a1_pair(self) -> tuple[Fraction, Fraction]:
        """Both signed readings of A_1, ascending."""
        return (-self.a1_magnitude, self.a1_magnitude)


@dataclass(frozen=True)
class QuotientReport:
    """Assembled invariants and verdict for one quotient M_h/tau_h."""

    h: int
    contributions: FixedPointContributions
    mu_quotient: AmbiguousResidue | None
    verdict: Verdict

    def __post_init__(self) -> None:
        applicable = self.h * (self.h - 1) % 56 == 0
        if self.verdict is not Verdict.NOT_APPLICABLE and not applicable:
            raise ValueError("a classification verdict requires M_h ~ S^7")
        if self.verdict is Verdict.REAL_PROJECTIVE_7 and self.mu_quotient != MU_RP7:
            raise ValueError("RP7 verdict requires mu = {1/32, 31/32}")


def fixed_point_contributions(bundle: MilnorBundle) -> FixedPointContributions:
    """A_1 = +/- (2h-1)/16, A_2 = 1, equivariant signature 1.

    A_1 is the p1 coefficient of the normal bundle of the fixed S^4 (the
    same +/- 2(2h-1) as the sphere bundle itself) scaled by 1/32; A_2 is
    that bundle's Euler number.  The involution fixes the generator of
    H^4(S^4), so the equivariant signature agrees with the ordinary one.
    """
    data = characteristic_data(bundle)
    return FixedPointContributions(
        a1_magnitude=Fraction(data.p1_magnitude, 32),
        a2=Fraction(data.euler_coeff),
        equivariant_signature=1,
    )


def mu_quotient(bundle: MilnorBundle) -> AmbiguousResidue:
    """mu(M_h/tau_h) = h(h-1)/112 +/- (2h-1)/32 mod 1, as a value set.

    Raises :class:`NotDiffeoS7Error` unless 56 | h(h-1): the fixed-point
    reduction is only asserted for quotients of the standard sphere, and
    extrapolating it would produce numbers with no meaning.

    The closed form above is cross-checked against the term-by-term
    assembly: half the bounding-manifold term of the covering sphere, plus
    (1/2) A_1, plus A_2/(2^6*7), minus the equivariant signature/(2^6*7).
    """
    if not is_diffeo_s7(bundle):
        raise NotDiffeoS7Error(
            f"h={bundle.h}: h(h-1) = {bundle.h * (bundle.h - 1)} is not divisible by 56"
        )
    h = bundle.h
    closed = add_ambiguous(
        reduce_mod_z(Fraction(h * (h - 1), 112)),
        ambiguous(Fraction(2 * h - 1, 32)),
    )

    contrib = fixed_point_contributions(bundle)
    disk = disk_bundle_invariants(bundle)
    half_bound = Fraction(disk.p1_squared, 2**8 * 7) - Fraction(disk.signature, 2**6 * 7)
    definite = (
        half_bound
        + contrib.a2 / (2**6 * 7)
        - Fraction(contrib.equivariant_signature, 2**6 * 7)
    )
    assembled = add_ambiguous(
        reduce_mod_z(definite),
        ambiguous(contrib.a1_magnitude / 2),
    )
    if assembled != closed:
        raise DerivationMismatch(
            f"mu(M_{h}/tau): fixed-point assembly {assembled} != closed form {closed}"
        )
    return closed


def classify_quotient(bundle: MilnorBundle) -> QuotientReport:
    """Identify M_h/tau_h, or report not-applicable when M_h is exotic."""
    contrib = fixed_point_contributions(bundle)
    if not is_diffeo_s7(bundle):
        return QuotientReport(bundle.h, contrib, None, Verdict.NOT_APPLICABLE)
    mu = mu_quotient(bundle)
    if mu == MU_RP7:
        verdict = Verdict.REAL_PROJECTIVE_7
    elif mu == MU_RP7_SUM_14M2:
        verdict = Verdict.REAL_PROJECTIVE_7_SUM_14M2
    else:
        raise DichotomyViolationError(
            f"mu(M_{bundle.h}/tau) = {mu} matches neither RP^7 nor RP^7 # 14 M_2"
        )
    return QuotientReport(bundle.h, contrib, mu, verdict)
