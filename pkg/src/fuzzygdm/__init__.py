"""Group decision engine: criterion votes + discussion sentiment -> fuzzy ranking."""

from .feedback import ConsensusReport, FeedbackEntry, consensus, feedback_value
from .pipeline import AlternativeResult, DecisionReport, rank, run_pipeline
from .voting import (
    AlternativeProfile,
    ExpertPreferenceVector,
    FeatureSpec,
    PreferenceMatrix,
    collective_matrix,
    compute_preference_matrix,
    feature_means,
    feature_weights,
    hotel_feature_specs,
    raw_preference,
    scale_preference,
)

__version__ = "0.1.0"

__all__ = [
    "AlternativeProfile",
    "AlternativeResult",
    "ConsensusReport",
    "DecisionReport",
    "ExpertPreferenceVector",
    "FeatureSpec",
    "FeedbackEntry",
    "PreferenceMatrix",
    "collective_matrix",
    "compute_preference_matrix",
    "consensus",
    "feature_means",
    "feature_weights",
    "feedback_value",
    "hotel_feature_specs",
    "rank",
    "raw_preference",
    "run_pipeline",
    "scale_preference",
    "__version__",
]
