"""Exact enumeration and closed-form counting of 2-bridge knots by crossing number."""

from .contfrac import (
    DegenerateTail,
    EvenSequence,
    NoEvenExpansion,
    NotAKnotFraction,
    OutOfRange,
    RejectOddEntry,
    RejectOddLength,
    RejectZeroEntry,
    SequenceError,
    cf_value,
    crossing_number,
    even_expansion,
    genus,
    sign_changes,
    validate,
)
from .enumeration import (
    Tally,
    compositions,
    enumerate_classes,
    enumerate_sequences,
    sign_patterns,
    strata,
    tally,
)
from .formulas import (
    BranchMismatch,
    ChiralBranch,
    CrossingClass,
    InexactDivision,
    NonIntegerResult,
    avg_genus,
    avg_genus_mirror,
    correction,
    correction_mirror,
    residual,
    residual_mirror,
    stratum_closed_A,
    stratum_closed_B,
    tg_closed,
    tg_mirror_by_strata,
    tg_mirror_closed,
    tk_closed,
    tk_mirror_closed,
)
from .identities import (
    IdentityReport,
    alpha_recurrence_check,
    alpha_sum,
    beta_sum,
    binom,
    weighted_sum_check,
    x2_specialization_check,
    wellknown_check,
)
from .knots import (
    KnotClass,
    Mode,
    ParityMismatch,
    StratumKey,
    canonicalize,
    is_amphichiral,
    negate,
    reverse,
    reverse_negate,
    stratum_members,
    stratum_of,
)

__version__ = "0.1.0"

__all__ = [
    "BranchMismatch",
    "ChiralBranch",
    "CrossingClass",
    "DegenerateTail",
    "EvenSequence",
    "IdentityReport",
    "InexactDivision",
    "KnotClass",
    "Mode",
    "NoEvenExpansion",
    "NonIntegerResult",
    "NotAKnotFraction",
    "OutOfRange",
    "ParityMismatch",
    "RejectOddEntry",
    "RejectOddLength",
    "RejectZeroEntry",
    "SequenceError",
    "StratumKey",
    "Tally",
    "alpha_recurrence_check",
    "alpha_sum",
    "avg_genus",
    "avg_genus_mirror",
    "beta_sum",
    "binom",
    "canonicalize",
    "cf_value",
    "compositions",
    "correction",
    "correction_mirror",
    "crossing_number",
    "enumerate_classes",
    "enumerate_sequences",
    "even_expansion",
    "genus",
    "is_amphichiral",
    "weighted_sum_check",
    "x2_specialization_check",
    "negate",
    "residual",
    "residual_mirror",
    "reverse",
    "reverse_negate",
    "sign_changes",
    "sign_patterns",
    "strata",
    "stratum_closed_A",
    "stratum_closed_B",
    "stratum_members",
    "stratum_of",
    "tally",
    "tg_closed",
    "tg_mirror_by_strata",
    "tg_mirror_closed",
    "tk_closed",
    "tk_mirror_closed",
    "validate",
    "wellknown_check",
]
