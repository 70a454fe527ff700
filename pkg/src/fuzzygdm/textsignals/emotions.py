"""Lexicon-based emotion detection."""

from __future__ import annotations

from pathlib import Path

from .lexicon import EMOTION_LABELS, load_emotion_lexicon
from .sentiment import tokenize
from .signals import EmotionVector


class EmotionScorer:
    """Counts emotion-lexicon hits and normalizes them into an EmotionVector."""

    def __init__(self, lexicon: dict[str, str] | None = None) -> None:
        self.lexicon = dict(lexicon) if lexicon is not None else load_emotion_lexicon()

    @classmethod
    def from_path(cls, path: str | Path) -> "EmotionScorer":
        return cls(load_emotion_lexicon(path))

    def score(self, text: str) -> EmotionVector:
        counts = dict.fromkeys(EMOTION_LABELS, 0)
        for token in tokenize(text):
            label = self.lexicon.get(token)
            if label is not None:
                counts[label] += 1
        total = sum(counts.values())
        if total == 0:
            return EmotionVector()
        return EmotionVector(**{label: counts[label] / total for label in EMOTION_LABELS})
