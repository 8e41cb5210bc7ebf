"""alescore: phase-aware composite scoring and rank tracking for
article-level metrics.

Weights come from pairwise judgment matrices (principal eigenvector with
consistency diagnostics), metric columns are min-max normalized, and
composite scores are tracked across metric snapshots.
"""

__version__ = "0.1.0"

from .ahp import (  # noqa: E402
    ConsistencyReport,
    PairwiseMatrix,
    RANDOM_INDEX,
    ValidationReport,
    WeightVector,
    consistency,
    principal_weights,
    validate_matrix,
)
from .dynamics import (  # noqa: E402
    MetricTotalsSeries,
    RankTrajectory,
    Trend,
    classify_trend,
    export_bumpchart,
    metric_totals,
    trajectories,
)
from .errors import EngineError  # noqa: E402
from .factors import (  # noqa: E402
    DataMatrix,
    FactorReport,
    LoadingMatrix,
    correlation_matrix,
    eigen_sym,
    fit_factors,
    varimax,
    varimax_rotation,
)
from .io import (  # noqa: E402
    ResultDocument,
    parse_matrix_file,
    parse_snapshot,
    read_result,
    write_result,
    write_snapshot,
)
from .presets import PHASE_MATRICES, preset_weights  # noqa: E402
from .profiles import DEFAULT_PROFILE  # noqa: E402
from .scoring import (  # noqa: E402
    ArticleMetrics,
    DEFAULT_SCHEDULE,
    PhaseSchedule,
    ScoredRanking,
    Snapshot,
    composite_scores,
    determine_phase,
    normalize_column,
    score_pipeline,
    select_cohort_top,
)

__all__ = [
    "ArticleMetrics",
    "ConsistencyReport",
    "DataMatrix",
    "DEFAULT_PROFILE",
    "DEFAULT_SCHEDULE",
    "EngineError",
    "FactorReport",
    "LoadingMatrix",
    "MetricTotalsSeries",
    "PHASE_MATRICES",
    "PairwiseMatrix",
    "PhaseSchedule",
    "RANDOM_INDEX",
    "RankTrajectory",
    "ResultDocument",
    "ScoredRanking",
    "Snapshot",
    "Trend",
    "ValidationReport",
    "WeightVector",
    "classify_trend",
    "composite_scores",
    "consistency",
    "correlation_matrix",
    "determine_phase",
    "eigen_sym",
    "export_bumpchart",
    "fit_factors",
    "metric_totals",
    "normalize_column",
    "parse_matrix_file",
    "parse_snapshot",
    "preset_weights",
    "principal_weights",
    "read_result",
    "score_pipeline",
    "select_cohort_top",
    "trajectories",
    "validate_matrix",
    "varimax",
    "varimax_rotation",
    "write_result",
    "write_snapshot",
]
