"""Emotion vectors, sentiment/emotion fusion and per-alternative aggregation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import NoDiscussionSignalError, ValidationError
from .lexicon import EMOTION_LABELS

POSITIVE_EMOTIONS = ("happy", "surprise")
NEGATIVE_EMOTIONS = ("angry", "sad", "fear")


@dataclass(frozen=True)
class EmotionVector:
    """Scores for the five tracked emotions, each in [0, 1].

    The built-in scorer emits normalized vectors (components sum to 1, or
    all zero); externally supplied vectors may carry rounded components,
    so only the per-component bounds are enforced here.
    """

    happy: float = 0.0
    angry: float = 0.0
    surprise: float = 0.0
    sad: float = 0.0
    fear: float = 0.0

    def __post_init__(self) -> None:
        for label in EMOTION_LABELS:
            value = getattr(self, label)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"emotion {label} = {value} outside [0, 1]")

    def composite(self) -> float:
        """Strongest positive emotion minus strongest negative emotion."""
        positive = max(getattr(self, label) for label in POSITIVE_EMOTIONS)
        negative = max(getattr(self, label) for label in NEGATIVE_EMOTIONS)
        return positive - negative

    def dominant(self) -> str | None:
        """Label of the strongest emotion, or None for the zero vector."""
        best = max(EMOTION_LABELS, key=lambda label: getattr(self, label))
        return best if getattr(self, best) > 0.0 else None

    def is_zero(self) -> bool:
        return all(getattr(self, label) == 0.0 for label in EMOTION_LABELS)

    def as_dict(self) -> dict[str, float]:
        return {label: getattr(self, label) for label in EMOTION_LABELS}

    @classmethod
    def from_dict(cls, data: Mapping[str, float]) -> "EmotionVector":
        unknown = set(data) - set(EMOTION_LABELS)
        if unknown:
            raise ValidationError(f"unknown emotion labels: {sorted(unknown)}")
        return cls(**{label: float(data.get(label, 0.0)) for label in EMOTION_LABELS})


@dataclass(frozen=True)
class FusionWeights:
    """Relative influence of sentiment (alpha) and emotion (beta)."""

    alpha: float = 0.6
    beta: float = 0.4

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValidationError("fusion weights must be non-negative")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValidationError(f"fusion weights must sum to 1, got {self.alpha + self.beta}")


DEFAULT_FUSION = FusionWeights()


@dataclass(frozen=True)
class DiscussionSignal:
    """One participant's sentiment and emotion reading for one alternative."""

    participant_id: str
    alternative_id: str
    sentiment: float
    emotions: EmotionVector

    def __post_init__(self) -> None:
        if not -1.0 <= self.sentiment <= 1.0:
            raise ValidationError(
                f"compound sentiment {self.sentiment} outside [-1, 1] "
                f"({self.participant_id}/{self.alternative_id})"
            )


def aggregate_signals(signals: Sequence[DiscussionSignal]) -> tuple[float, float]:
    """Mean sentiment and mean composite emotion over one alternative's signals."""
    if not signals:
        raise NoDiscussionSignalError("no discussion signal to aggregate")
    n = len(signals)
    avg_sentiment = sum(s.sentiment for s in signals) / n
    avg_emotion = sum(s.emotions.composite() for s in signals) / n
    return avg_sentiment, avg_emotion


def total_sentiment(
    avg_sentiment: float,
    avg_emotion: float,
    weights: FusionWeights = DEFAULT_FUSION,
) -> float:
    """Weighted fusion of the two averages, clamped to [-1, 1]."""
    fused = weights.alpha * avg_sentiment + weights.beta * avg_emotion
    return max(-1.0, min(1.0, fused))


def group_by_alternative(
    signals: Iterable[DiscussionSignal],
) -> dict[str, list[DiscussionSignal]]:
    grouped: dict[str, list[DiscussionSignal]] = {}
    for signal in signals:
        grouped.setdefault(signal.alternative_id, []).append(signal)
    return grouped


def collapse_per_participant(
    signals: Sequence[DiscussionSignal],
) -> list[DiscussionSignal]:
    """Average a participant's multiple signals on one alternative into one,
    so verbose participants do not dominate the group aggregate."""
    buckets: dict[tuple[str, str], list[DiscussionSignal]] = {}
    order: list[tuple[str, str]] = []
    for signal in signals:
        key = (signal.participant_id, signal.alternative_id)
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(signal)
    collapsed = []
    for key in order:
        group = buckets[key]
        if len(group) == 1:
            collapsed.append(group[0])
            continue
        n = len(group)
        collapsed.append(
            DiscussionSignal(
                participant_id=key[0],
                alternative_id=key[1],
                sentiment=sum(s.sentiment for s in group) / n,
                emotions=EmotionVector(
                    **{
                        label: sum(getattr(s.emotions, label) for s in group) / n
                        for label in EMOTION_LABELS
                    }
                ),
            )
        )
    return collapsed
