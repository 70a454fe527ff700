"""Deterministic lexicon scorer producing a compound polarity in [-1, 1].

Rules, applied in order per valenced token: a booster immediately before it
shifts the valence by 0.293 away from zero; any negator within the three
preceding tokens flips it by a factor of -0.74.  Trailing exclamation marks
(at most four) push the summed valence further from zero by 0.292 each.
The sum s is squashed to s / sqrt(s^2 + 15) and clamped.
"""

from __future__ import annotations

import math
import re
from pathlib import Path

from .lexicon import BOOSTERS, NEGATORS, load_sentiment_lexicon

BOOST_STEP = 0.293
NEGATION_FACTOR = -0.74
EXCLAMATION_STEP = 0.292
MAX_EXCLAMATIONS = 4
NORMALIZATION_ALPHA = 15.0
NEGATION_WINDOW = 3

_TOKEN = re.compile(r"[a-z0-9']+")


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


def normalize_valence(total: float) -> float:
    score = total / math.sqrt(total * total + NORMALIZATION_ALPHA)
    return max(-1.0, min(1.0, score))


class SentimentScorer:
    """Scores free text against an immutable valence lexicon."""

    def __init__(self, lexicon: dict[str, float] | None = None) -> None:
        self.lexicon = dict(lexicon) if lexicon is not None else load_sentiment_lexicon()

    @classmethod
    def from_path(cls, path: str | Path) -> "SentimentScorer":
        return cls(load_sentiment_lexicon(path))

    def score(self, text: str) -> float:
        tokens = tokenize(text)
        total = 0.0
        for i, token in enumerate(tokens):
            valence = self.lexicon.get(token)
            if valence is None:
                continue
            if i > 0 and tokens[i - 1] in BOOSTERS:
                valence += math.copysign(BOOST_STEP, valence)
            window = tokens[max(0, i - NEGATION_WINDOW):i]
            if any(tok in NEGATORS for tok in window):
                valence *= NEGATION_FACTOR
            total += valence
        exclamations = min(MAX_EXCLAMATIONS, len(text) - len(text.rstrip("!")))
        if exclamations and total != 0.0:
            total += math.copysign(EXCLAMATION_STEP * exclamations, total)
        return normalize_valence(total)
