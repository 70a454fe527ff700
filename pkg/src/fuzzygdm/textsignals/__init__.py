from .emotions import EmotionScorer
from .lexicon import (
    BOOSTERS,
    EMOTION_LABELS,
    NEGATORS,
    load_emotion_lexicon,
    load_sentiment_lexicon,
)
from .providers import BuiltinLexiconProvider, PrecomputedSignalProvider, SignalProvider
from .sentiment import SentimentScorer, normalize_valence, tokenize
from .signals import (
    DEFAULT_FUSION,
    DiscussionSignal,
    EmotionVector,
    FusionWeights,
    aggregate_signals,
    collapse_per_participant,
    group_by_alternative,
    total_sentiment,
)

__all__ = [
    "BOOSTERS",
    "BuiltinLexiconProvider",
    "DEFAULT_FUSION",
    "DiscussionSignal",
    "EMOTION_LABELS",
    "EmotionScorer",
    "EmotionVector",
    "FusionWeights",
    "NEGATORS",
    "PrecomputedSignalProvider",
    "SentimentScorer",
    "SignalProvider",
    "aggregate_signals",
    "collapse_per_participant",
    "group_by_alternative",
    "load_emotion_lexicon",
    "load_sentiment_lexicon",
    "normalize_valence",
    "tokenize",
    "total_sentiment",
]
