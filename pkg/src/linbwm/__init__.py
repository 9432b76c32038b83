"""Linear best-worst method: closed-form weights, consistency, sensitivity.

The public surface re-exports the core types and operations; the heavier
entry points (CLI, HTTP service) live in :mod:`linbwm.cli` and
:mod:`linbwm.service`.
"""

from .aggregate import AggregationResult, BlockReport, GroupStudy, rank, solve_study
from .core import (
    BEST_SIDE,
    CONSISTENT,
    DEGENERATE,
    ETA_TOL,
    MIXED,
    SAATY_SCALE_MAX,
    WORST_SIDE,
    AnalyticalSolution,
    DominanceWarning,
    EpsilonTable,
    InputError,
    PairwiseComparisonSystem,
    Pivot,
    compute_epsilons,
    consistency_index,
    consistency_ratio,
    objective_value,
    solve_analytical,
    solve_with_pivot,
    validate_pcs,
    worst_case_pcs,
)
from .lp_oracle import (
    LinearProgram,
    OracleError,
    OracleResult,
    VerificationReport,
    build_lp,
    simplex_solve,
    verify,
)
from .sensitivity import (
    VARY_BEST,
    VARY_BOTH,
    VARY_WORST,
    EquivalenceClass,
    EquivalenceQuery,
    enumerate_equivalent,
    is_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "AggregationResult",
    "AnalyticalSolution",
    "BlockReport",
    "DominanceWarning",
    "EpsilonTable",
    "EquivalenceClass",
    "EquivalenceQuery",
    "GroupStudy",
    "InputError",
    "LinearProgram",
    "OracleError",
    "OracleResult",
    "PairwiseComparisonSystem",
    "Pivot",
    "VerificationReport",
    "BEST_SIDE",
    "CONSISTENT",
    "DEGENERATE",
    "ETA_TOL",
    "MIXED",
    "SAATY_SCALE_MAX",
    "VARY_BEST",
    "VARY_BOTH",
    "VARY_WORST",
    "WORST_SIDE",
    "build_lp",
    "compute_epsilons",
    "consistency_index",
    "consistency_ratio",
    "enumerate_equivalent",
    "is_equivalent",
    "objective_value",
    "rank",
    "simplex_solve",
    "solve_analytical",
    "solve_study",
    "solve_with_pivot",
    "validate_pcs",
    "verify",
    "worst_case_pcs",
]
