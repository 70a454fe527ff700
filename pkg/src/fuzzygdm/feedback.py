"""Post-decision feedback scoring and group consensus classification.

Agreement and confidence ratings (0-10 each) run through a second fuzzy
engine to yield a feedback value; the distribution of feedback values is
summarized by its mean and interquartile range and classified as high
(mean >= 7), medium (mean >= 4) or low consensus.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import ValidationError
from .fuzzy.engine import InferenceEngine
from .fuzzy.loader import load_bundled_engine

HIGH_THRESHOLD = 7.0
MEDIUM_THRESHOLD = 4.0

AGREEMENT_INPUT = "agreement"
CONFIDENCE_INPUT = "confidence"


@dataclass(frozen=True)
class FeedbackEntry:
    participant_id: str
    agreement: float
    confidence: float
    value: float

    def to_dict(self) -> dict:
        return {
            "participant_id": self.participant_id,
            "agreement": self.agreement,
            "confidence": self.confidence,
            "value": self.value,
        }


@dataclass(frozen=True)
class ConsensusReport:
    iqr: float
    mean: float
    level: str

    def to_dict(self) -> dict:
        return {"iqr": self.iqr, "mean": self.mean, "level": self.level}


@lru_cache(maxsize=1)
def default_feedback_engine() -> InferenceEngine:
    return load_bundled_engine("feedback")


def feedback_value(
    agreement: float,
    confidence: float,
    engine: InferenceEngine | None = None,
) -> float:
    """Fuzzy feedback score in [0, 10]; out-of-range inputs are clamped."""
    engine = engine or default_feedback_engine()
    return engine.infer({AGREEMENT_INPUT: agreement, CONFIDENCE_INPUT: confidence})


def classify_consensus(mean: float) -> str:
    if mean >= HIGH_THRESHOLD:
        return "high"
    if mean >= MEDIUM_THRESHOLD:
        return "medium"
    return "low"


def consensus(values: Sequence[float]) -> ConsensusReport:
    """Mean, linearly interpolated IQR and consensus level of feedback values."""
    if len(values) < 2:
        raise ValidationError("consensus needs at least two feedback values")
    mean = sum(values) / len(values)
    q1, _, q3 = statistics.quantiles(values, n=4, method="inclusive")
    return ConsensusReport(iqr=q3 - q1, mean=mean, level=classify_consensus(mean))
