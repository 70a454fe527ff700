"""Signal providers: live lexicon scoring or precomputed score tables.

The precomputed provider exists for sessions whose discussion happened
elsewhere: per-(participant, alternative) compound scores and emotion
vectors are loaded from a fixture and looked up instead of computed.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Mapping

from ..errors import ValidationError
from .emotions import EmotionScorer
from .sentiment import SentimentScorer
from .signals import DiscussionSignal, EmotionVector


class BuiltinLexiconProvider:
    """Scores comment text live with the bundled (or supplied) lexicons."""

    kind = "builtin-lexicon"

    def __init__(
        self,
        sentiment_scorer: SentimentScorer | None = None,
        emotion_scorer: EmotionScorer | None = None,
    ) -> None:
        self.sentiment_scorer = sentiment_scorer or SentimentScorer()
        self.emotion_scorer = emotion_scorer or EmotionScorer()

    def comment_scores(
        self, participant_id: str, alternative_id: str, text: str
    ) -> tuple[float, EmotionVector]:
        return self.sentiment_scorer.score(text), self.emotion_scorer.score(text)

    def signals_from_comments(
        self, comments: Iterable[tuple[str, str, str]]
    ) -> list[DiscussionSignal]:
        """One signal per (participant, alternative); a participant's multiple
        comments on one alternative are averaged first."""
        buckets: dict[tuple[str, str], list[tuple[float, EmotionVector]]] = {}
        for participant_id, alternative_id, text in comments:
            scores = self.comment_scores(participant_id, alternative_id, text)
            buckets.setdefault((participant_id, alternative_id), []).append(scores)
        signals = []
        for (participant_id, alternative_id), scored in sorted(buckets.items()):
            n = len(scored)
            sentiment = sum(s for s, _ in scored) / n
            emotions = EmotionVector(
                **{
                    label: sum(getattr(vec, label) for _, vec in scored) / n
                    for label in ("happy", "angry", "surprise", "sad", "fear")
                }
            )
            signals.append(
                DiscussionSignal(participant_id, alternative_id, sentiment, emotions)
            )
        return signals


class PrecomputedSignalProvider:
    """Serves signals from fixture tables keyed by (participant, alternative)."""

    kind = "precomputed"

    def __init__(
        self,
        sentiment: Mapping[str, Mapping[str, float]],
        emotions: Mapping[str, Mapping[str, EmotionVector]],
    ) -> None:
        self.sentiment = {p: dict(row) for p, row in sentiment.items()}
        self.emotions = {p: dict(row) for p, row in emotions.items()}

    @classmethod
    def from_fixture(cls, data: Mapping) -> "PrecomputedSignalProvider":
        try:
            sentiment_raw = data["sentiment"]
            emotions_raw = data["emotions"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"signals fixture needs 'sentiment' and 'emotions': {exc}")
        sentiment = {
            participant: {alt: float(score) for alt, score in row.items()}
            for participant, row in sentiment_raw.items()
        }
        emotions = {
            participant: {alt: EmotionVector.from_dict(vec) for alt, vec in row.items()}
            for participant, row in emotions_raw.items()
        }
        return cls(sentiment, emotions)

    @classmethod
    def from_path(cls, path: str | Path) -> "PrecomputedSignalProvider":
        with open(path, encoding="utf-8") as handle:
            return cls.from_fixture(json.load(handle))

    def remapped(self, participant_ids: Mapping[str, str]) -> "PrecomputedSignalProvider":
        """Copy with participant keys renamed (fixture ids -> session ids)."""
        return PrecomputedSignalProvider(
            sentiment={participant_ids.get(p, p): row for p, row in self.sentiment.items()},
            emotions={participant_ids.get(p, p): row for p, row in self.emotions.items()},
        )

    def comment_scores(
        self, participant_id: str, alternative_id: str, text: str
    ) -> tuple[float, EmotionVector]:
        try:
            sentiment = self.sentiment[participant_id][alternative_id]
            emotions = self.emotions[participant_id][alternative_id]
        except KeyError:
            raise ValidationError(
                f"precomputed signals missing entry for "
                f"({participant_id!r}, {alternative_id!r})"
            ) from None
        return sentiment, emotions

    def signals(self) -> list[DiscussionSignal]:
        """Every table entry as a DiscussionSignal (explicit zeros included)."""
        out = []
        for participant_id in sorted(self.sentiment):
            row = self.sentiment[participant_id]
            emotion_row = self.emotions.get(participant_id, {})
            for alternative_id in sorted(row):
                out.append(
                    DiscussionSignal(
                        participant_id=participant_id,
                        alternative_id=alternative_id,
                        sentiment=row[alternative_id],
                        emotions=emotion_row.get(alternative_id, EmotionVector()),
                    )
                )
        return out

    def covers(self, pairs: Iterable[tuple[str, str]]) -> list[tuple[str, str]]:
        """Pairs from the input that the tables do not cover."""
        missing = []
        for participant_id, alternative_id in pairs:
            if (
                alternative_id not in self.sentiment.get(participant_id, {})
                or alternative_id not in self.emotions.get(participant_id, {})
            ):
                missing.append((participant_id, alternative_id))
        return missing


SignalProvider = BuiltinLexiconProvider | PrecomputedSignalProvider
