"""End-to-end ranking: voting scores + fused text signals -> fuzzy scores.

The inference engine must expose input variables named ``voting`` and
``sentiment``; the bundled total-preference engine does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoDiscussionSignalError, ValidationError
from .fuzzy.engine import InferenceEngine
from .textsignals.signals import (
    DEFAULT_FUSION,
    DiscussionSignal,
    FusionWeights,
    aggregate_signals,
    collapse_per_participant,
    group_by_alternative,
    total_sentiment,
)
from .voting import (
    AlternativeProfile,
    ExpertPreferenceVector,
    FeatureSpec,
    compute_preference_matrix,
)

VOTING_INPUT = "voting"
SENTIMENT_INPUT = "sentiment"


@dataclass(frozen=True)
class AlternativeResult:
    alternative_id: str
    voting_score: float
    total_sentiment: float
    fuzzy_score: float
    rank: int

    def to_dict(self) -> dict:
        return {
            "alternative_id": self.alternative_id,
            "voting_score": self.voting_score,
            "total_sentiment": self.total_sentiment,
            "fuzzy_score": self.fuzzy_score,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class DecisionReport:
    results: tuple[AlternativeResult, ...]
    winner_id: str
    engine_fingerprint: str

    def to_dict(self) -> dict:
        return {
            "results": [result.to_dict() for result in self.results],
            "winner": self.winner_id,
            "engine_fingerprint": self.engine_fingerprint,
        }


def rank(
    scored: Sequence[tuple[str, float, float, float]]
) -> tuple[AlternativeResult, ...]:
    """Order by fuzzy score descending; ties break on voting score, then id."""
    if not scored:
        raise ValidationError("nothing to rank")
    ordered = sorted(scored, key=lambda row: (-row[3], -row[1], row[0]))
    return tuple(
        AlternativeResult(
            alternative_id=alt_id,
            voting_score=voting,
            total_sentiment=sentiment,
            fuzzy_score=fuzzy,
            rank=position,
        )
        for position, (alt_id, voting, sentiment, fuzzy) in enumerate(ordered, start=1)
    )


def _check_engine(engine: InferenceEngine) -> None:
    names = {variable.name for variable in engine.inputs}
    if names != {VOTING_INPUT, SENTIMENT_INPUT}:
        raise ValidationError(
            f"pipeline engine must take inputs {VOTING_INPUT!r} and "
            f"{SENTIMENT_INPUT!r}, got {sorted(names)}"
        )


def run_pipeline(
    alternatives: Sequence[AlternativeProfile],
    specs: Sequence[FeatureSpec],
    experts: Sequence[ExpertPreferenceVector],
    signals: Iterable[DiscussionSignal],
    engine: InferenceEngine,
    weights: FusionWeights = DEFAULT_FUSION,
) -> DecisionReport:
    _check_engine(engine)
    matrix = compute_preference_matrix(alternatives, specs, experts)
    by_alternative = group_by_alternative(signals)
    scored = []
    for alternative in alternatives:
        alt_id = alternative.id
        alt_signals = by_alternative.get(alt_id)
        if not alt_signals:
            raise NoDiscussionSignalError(f"no discussion signal for alternative {alt_id!r}")
        avg_sentiment, avg_emotion = aggregate_signals(collapse_per_participant(alt_signals))
        fused = total_sentiment(avg_sentiment, avg_emotion, weights)
        voting_score = matrix.collective[alt_id]
        fuzzy_score = engine.infer({VOTING_INPUT: voting_score, SENTIMENT_INPUT: fused})
        scored.append((alt_id, voting_score, fused, fuzzy_score))
    results = rank(scored)
    return DecisionReport(
        results=results,
        winner_id=results[0].alternative_id,
        engine_fingerprint=engine.fingerprint,
    )
