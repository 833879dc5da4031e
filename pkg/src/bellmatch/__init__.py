"""Multi-criteria decision ranking with two-sided stable matching.

Alternatives are scored by weighted path fractions (how far each raw
value sits between the least and most desirable state of its criterion),
and criteria are paired with alternatives through deferred acceptance.
"""

from .bellinger import (
    NormalizedMatrix,
    RankingResult,
    WeightedMatrix,
    apply_weights,
    best_variant,
    normalize_matrix,
    normalize_value,
    rank,
    total_ratings,
)
from .combinatorics import count_subsets
from .loader import (
    ProblemFormatError,
    career2019_paths,
    load_career2019,
    load_problem,
    save_problem,
)
from .matching import (
    Matching,
    PreferenceProfile,
    build_preferences,
    enumerate_stable,
    gale_shapley,
    is_stable,
)
from .model import (
    Alternative,
    Criterion,
    DecisionProblem,
    Direction,
    ValidationReport,
    Violation,
    clamp_values,
    validate_problem,
)
from .report import render_sensitivity, write_report
from .sensitivity import SensitivityReport, perturb_weights, renormalize_weights

__all__ = [
    "Alternative",
    "Criterion",
    "DecisionProblem",
    "Direction",
    "Matching",
    "NormalizedMatrix",
    "PreferenceProfile",
    "ProblemFormatError",
    "RankingResult",
    "SensitivityReport",
    "ValidationReport",
    "Violation",
    "WeightedMatrix",
    "apply_weights",
    "best_variant",
    "build_preferences",
    "career2019_paths",
    "clamp_values",
    "count_subsets",
    "enumerate_stable",
    "gale_shapley",
    "is_stable",
    "load_career2019",
    "load_problem",
    "normalize_matrix",
    "normalize_value",
    "perturb_weights",
    "rank",
    "render_sensitivity",
    "renormalize_weights",
    "save_problem",
    "total_ratings",
    "validate_problem",
    "write_report",
]
