"""Exact Eells-Kuiper mu-invariants for the Milnor sphere-bundle family."""

from .bundles import (
    CharacteristicData,
    DerivationMismatch,
    DiskBundleInvariants,
    MilnorBundle,
    characteristic_data,
    disk_bundle_invariants,
    is_diffeo_s7,
    mu_total_space,
    theta7_class,
)
from .quotient import (
    MU_RP7,
    MU_RP7_SUM_14M2,
    DichotomyViolationError,
    FixedPointContributions,
    NotDiffeoS7Error,
    QuotientReport,
    Verdict,
    classify_quotient,
    fixed_point_contributions,
    mu_quotient,
)
from .qz import (
    AmbiguousResidue,
    DoubleAmbiguityError,
    Rational,
    ResidueModZ,
    add_ambiguous,
    ambiguous,
    reduce_mod_z,
)
from .verify import (
    Case,
    CaseReport,
    EmptyRangeError,
    ResidueSolution,
    TheoremSweep,
    VerifyRow,
    brute_force_theorem,
    check_case,
    direct_mu_set,
    enumerate_residues,
    residues_by_crt,
    verify_range,
)

__all__ = [
    "AmbiguousResidue",
    "Case",
    "CaseReport",
    "CharacteristicData",
    "DerivationMismatch",
    "DichotomyViolationError",
    "DiskBundleInvariants",
    "DoubleAmbiguityError",
    "EmptyRangeError",
    "FixedPointContributions",
    "MU_RP7",
    "MU_RP7_SUM_14M2",
    "MilnorBundle",
    "NotDiffeoS7Error",
    "QuotientReport",
    "Rational",
    "ResidueModZ",
    "ResidueSolution",
    "TheoremSweep",
    "Verdict",
    "VerifyRow",
    "add_ambiguous",
    "ambiguous",
    "brute_force_theorem",
    "characteristic_data",
    "check_case",
    "classify_quotient",
    "direct_mu_set",
    "disk_bundle_invariants",
    "enumerate_residues",
    "fixed_point_contributions",
    "is_diffeo_s7",
    "mu_quotient",
    "mu_total_space",
    "reduce_mod_z",
    "residues_by_crt",
    "theta7_class",
    "verify_range",
]
