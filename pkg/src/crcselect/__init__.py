"""CRC code evaluation over length intervals: exact minimum-distance
profiles, undetected-error probabilities, and generator searches."""

__version__ = "0.1.0"

from .codec import CodeSpec, burst_coverage, check, check_columns, encode
from .errors import (
    CheckpointError,
    ConsistencyError,
    DomainError,
    UnsupportedSizeError,
)
from .metrics import (
    Scorecard,
    cumulative_scores,
    improvement,
    p_ue,
    p_ue_first_term,
)
from .oracle import (
    McEstimate,
    brute_force_spectrum,
    exhaustive_pue,
    monte_carlo_pue,
)
from .search import (
    EarlyReject,
    EvalResult,
    SearchConfig,
    SearchReport,
    enumerate_candidates,
    evaluate_candidate,
    rank,
    run_search,
)
from .spectrum import (
    DistanceProfile,
    DualSweep,
    WeightDistribution,
    distance_profile,
    dual_weight_distribution,
    macwilliams_coefficient,
    macwilliams_transform,
    min_distance,
    profile_scan,
    spectrum_scan,
)

__all__ = [
    "CodeSpec",
    "CheckpointError",
    "ConsistencyError",
    "DistanceProfile",
    "DomainError",
    "DualSweep",
    "EarlyReject",
    "EvalResult",
    "McEstimate",
    "Scorecard",
    "SearchConfig",
    "SearchReport",
    "UnsupportedSizeError",
    "WeightDistribution",
    "brute_force_spectrum",
    "burst_coverage",
    "check",
    "check_columns",
    "cumulative_scores",
    "distance_profile",
    "dual_weight_distribution",
    "encode",
    "enumerate_candidates",
    "evaluate_candidate",
    "exhaustive_pue",
    "improvement",
    "macwilliams_coefficient",
    "macwilliams_transform",
    "min_distance",
    "monte_carlo_pue",
    "p_ue",
    "p_ue_first_term",
    "profile_scan",
    "rank",
    "run_search",
    "spectrum_scan",
]
