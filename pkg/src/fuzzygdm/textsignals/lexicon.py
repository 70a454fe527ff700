"""Lexicon loading for the bundled sentiment and emotion scorers.

File formats are plain UTF-8, one entry per line:
``token<TAB>valence`` for sentiment, ``token<TAB>emotion-label`` for
emotions.  Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..errors import ValidationError

EMOTION_LABELS = ("happy", "angry", "surprise", "sad", "fear")

NEGATORS = frozenset({
    "not", "no", "never", "neither", "nor", "cannot", "cant", "can't",
    "dont", "don't", "wont", "won't", "isnt", "isn't", "wasnt", "wasn't",
    "arent", "aren't", "werent", "weren't", "shouldnt", "shouldn't",
    "wouldnt", "wouldn't", "couldnt", "couldn't", "didnt", "didn't",
    "doesnt", "doesn't", "aint", "ain't", "hardly", "barely", "scarcely",
    "without", "rarely", "seldom", "none", "nothing", "nobody", "nowhere",
})

BOOSTERS = frozenset({
    "very", "really", "extremely", "absolutely", "completely", "totally",
    "incredibly", "so", "super", "too", "highly", "utterly", "especially",
    "particularly", "remarkably", "truly", "deeply", "hugely",
    "tremendously", "exceptionally", "insanely", "seriously",
})


def _read_lines(path: str | Path | None, bundled: str) -> list[str]:
    if path is None:
        text = resources.files("fuzzygdm.data.lexicons").joinpath(bundled).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return text.splitlines()


def _parse(lines: list[str], source: str) -> list[tuple[str, str]]:
    entries = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValidationError(f"{source}:{number}: expected 'token<TAB>value'")
        entries.append((parts[0].lower(), parts[1]))
    return entries


def load_sentiment_lexicon(path: str | Path | None = None) -> dict[str, float]:
    source = str(path) if path else "bundled sentiment lexicon"
    lexicon = {}
    for token, raw in _parse(_read_lines(path, "sentiment.txt"), source):
        try:
            lexicon[token] = float(raw)
        except ValueError as exc:
            raise ValidationError(f"{source}: bad valence {raw!r} for {token!r}") from exc
    return lexicon


def load_emotion_lexicon(path: str | Path | None = None) -> dict[str, str]:
    source = str(path) if path else "bundled emotion lexicon"
    lexicon = {}
    for token, label in _parse(_read_lines(path, "emotions.txt"), source):
        if label not in EMOTION_LABELS:
            raise ValidationError(f"{source}: unknown emotion {label!r} for {token!r}")
        lexicon[token] = label
    return lexicon
