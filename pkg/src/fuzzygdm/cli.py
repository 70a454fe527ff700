"""Command-line front end.

``fuzzygdm run`` executes the whole decision pipeline from fixture files
and writes the intermediate artifacts (voting matrix, collective scores,
aggregated signals, ranked report, consensus) as stable JSON plus optional
text tables.  ``fuzzygdm score-text`` scores a single string with the
bundled lexicons.  ``fuzzygdm serve`` starts the HTTP session service.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from .errors import GdmError, ValidationError
from .feedback import FeedbackEntry, consensus, feedback_value
from .fuzzy.loader import load_bundled_engine, load_engine
from .pipeline import DecisionReport, run_pipeline
from .textsignals.emotions import EmotionScorer
from .textsignals.providers import PrecomputedSignalProvider
from .textsignals.sentiment import SentimentScorer
from .textsignals.signals import aggregate_signals, group_by_alternative, total_sentiment
from .voting import (
    AlternativeProfile,
    ExpertPreferenceVector,
    compute_preference_matrix,
    hotel_feature_specs,
)

PRECISION = 4


def _round(value: Any) -> Any:
    """Round floats (recursively) so repeated runs emit identical bytes."""
    if isinstance(value, float):
        return round(value, PRECISION)
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def _write_json(path: Path, payload: Any) -> None:
    path.write_text(
        json.dumps(_round(payload), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def _load_json(path: str, label: str) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise ValidationError(f"{label} file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{label} file {path}: invalid JSON ({exc})")


def _load_alternatives(path: str) -> list[AlternativeProfile]:
    data = _load_json(path, "alternatives")
    if not isinstance(data, list) or not data:
        raise ValidationError(f"alternatives file {path}: expected a non-empty JSON array")
    profiles = []
    for index, doc in enumerate(data):
        if not isinstance(doc, dict) or "id" not in doc:
            raise ValidationError(f"alternatives file {path}: entry {index} missing 'id'")
        profiles.append(
            AlternativeProfile(id=doc["id"], values={k: v for k, v in doc.items() if k != "id"})
        )
    return profiles


def _load_stances(path: str) -> list[ExpertPreferenceVector]:
    data = _load_json(path, "stances")
    if not isinstance(data, list) or not data:
        raise ValidationError(f"stances file {path}: expected a non-empty JSON array")
    experts = []
    for index, doc in enumerate(data):
        try:
            participant_id = doc["participant_id"]
            stances = doc["stances"]
        except (KeyError, TypeError):
            raise ValidationError(
                f"stances file {path}: entry {index} needs participant_id and stances"
            )
        try:
            experts.append(
                ExpertPreferenceVector(participant_id=participant_id, stances=stances)
            )
        except ValidationError as exc:
            raise ValidationError(f"stances file {path}: {exc}")
    return experts


def _load_feedback(path: str) -> list[dict]:
    data = _load_json(path, "feedback")
    if not isinstance(data, list) or len(data) < 2:
        raise ValidationError(f"feedback file {path}: expected an array of at least 2 entries")
    for index, doc in enumerate(data):
        for key in ("participant_id", "agreement", "confidence"):
            if key not in doc:
                raise ValidationError(f"feedback file {path}: entry {index} missing {key!r}")
    return data


def _signals_table(
    provider: PrecomputedSignalProvider,
    alternatives: Sequence[AlternativeProfile],
    weights,
) -> dict:
    grouped = group_by_alternative(provider.signals())
    table = {}
    for alt in alternatives:
        signals = grouped.get(alt.id)
        if not signals:
            raise ValidationError(f"signals cover no participant for alternative {alt.id!r}")
        avg_sentiment, avg_emotion = aggregate_signals(signals)
        table[alt.id] = {
            "avg_sentiment": avg_sentiment,
            "avg_emotion": avg_emotion,
            "total_sentiment": total_sentiment(avg_sentiment, avg_emotion, weights),
        }
    return table


def _consensus_table(entries, verdict) -> str:
    header = f"{'participant':<14}{'agreement':>10}{'confidence':>11}{'value':>8}"
    lines = [header, "-" * len(header)]
    for entry in entries:
        lines.append(
            f"{entry.participant_id:<14}{entry.agreement:>10.1f}"
            f"{entry.confidence:>11.1f}{entry.value:>8.4f}"
        )
    lines.append(
        f"mean {verdict.mean:.4f}  iqr {verdict.iqr:.4f}  consensus {verdict.level}"
    )
    return "\n".join(lines) + "\n"


def _report_table(report: DecisionReport) -> str:
    header = f"{'rank':>4}  {'alternative':<14}{'voting':>8}{'sentiment':>11}{'fuzzy':>8}"
    lines = [header, "-" * len(header)]
    for result in report.results:
        lines.append(
            f"{result.rank:>4}  {result.alternative_id:<14}"
            f"{result.voting_score:>8.2f}{result.total_sentiment:>11.4f}"
            f"{result.fuzzy_score:>8.4f}"
        )
    lines.append(f"winner: {report.winner_id}")
    return "\n".join(lines) + "\n"


def cmd_run(args: argparse.Namespace) -> int:
    from .textsignals.signals import FusionWeights

    alternatives = _load_alternatives(args.alternatives)
    experts = _load_stances(args.stances)
    signals_doc = _load_json(args.signals, "signals")
    try:
        provider = PrecomputedSignalProvider.from_fixture(signals_doc)
    except (ValidationError, AttributeError, TypeError) as exc:
        raise ValidationError(f"signals file {args.signals}: {exc}")

    specs = hotel_feature_specs()
    engine = (
        load_engine(args.engine) if args.engine else load_bundled_engine("total_preference")
    )
    if args.defuzzifier:
        doc = engine.to_document()
        doc["defuzzifier"] = args.defuzzifier
        from .fuzzy.loader import engine_from_document

        engine = engine_from_document(doc)
    weights = FusionWeights()

    matrix = compute_preference_matrix(alternatives, specs, experts)
    report = run_pipeline(alternatives, specs, experts, provider.signals(), engine, weights)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(
        out / "voting-matrix.json",
        {
            "feature_count": matrix.feature_count,
            "raw": matrix.raw,
            "scaled": matrix.scaled,
        },
    )
    _write_json(out / "collective.json", dict(matrix.collective))
    _write_json(out / "signals.json", _signals_table(provider, alternatives, weights))
    _write_json(out / "report.json", report.to_dict())

    (out / "report.txt").write_text(_report_table(report), encoding="utf-8")

    if args.feedback:
        entries = []
        for doc in _load_feedback(args.feedback):
            agreement = min(10.0, max(0.0, float(doc["agreement"])))
            confidence = min(10.0, max(0.0, float(doc["confidence"])))
            entries.append(
                FeedbackEntry(
                    participant_id=doc["participant_id"],
                    agreement=agreement,
                    confidence=confidence,
                    value=feedback_value(agreement, confidence),
                )
            )
        verdict = consensus([entry.value for entry in entries])
        _write_json(
            out / "consensus.json",
            {"entries": [entry.to_dict() for entry in entries], **verdict.to_dict()},
        )
        (out / "consensus.txt").write_text(_consensus_table(entries, verdict), encoding="utf-8")

    if args.format == "table":
        print(_report_table(report), end="")
    else:
        print(f"winner: {report.winner_id}")
    return 0


def cmd_score_text(args: argparse.Namespace) -> int:
    sentiment = SentimentScorer().score(args.text)
    emotions = EmotionScorer().score(args.text)
    print(f"compound: {sentiment:.4f}")
    for label, value in emotions.as_dict().items():
        print(f"{label}: {value:.4f}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import ServiceConfig, create_app

    config = ServiceConfig(
        data_dir=args.data_dir,
        engine_path=args.engine,
        feedback_engine_path=args.feedback_engine,
        provider=args.provider,
        signals_path=args.signals,
        sentiment_lexicon=args.sentiment_lexicon,
        emotion_lexicon=args.emotion_lexicon,
        alpha=args.alpha,
        beta=args.beta,
        static_dir=args.static_dir,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzygdm")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the decision pipeline from fixture files")
    run.add_argument("--alternatives", required=True, help="alternatives JSON file")
    run.add_argument("--stances", required=True, help="stance vectors JSON file")
    run.add_argument("--signals", required=True, help="precomputed signals JSON file")
    run.add_argument("--feedback", help="feedback ratings JSON file (optional)")
    run.add_argument("--engine", help="inference engine JSON document (optional)")
    run.add_argument("--defuzzifier", choices=["centroid", "mom"],
                     help="override the engine's defuzzifier")
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--format", choices=["json", "table"], default="json")
    run.set_defaults(func=cmd_run)

    score = sub.add_parser("score-text", help="score one string with the bundled lexicons")
    score.add_argument("text")
    score.set_defaults(func=cmd_score_text)

    serve = sub.add_parser("serve", help="run the HTTP session service")
    serve.add_argument("--host", default=os.environ.get("FUZZYGDM_HOST", "127.0.0.1"))
    serve.add_argument("--port", type=int, default=int(os.environ.get("FUZZYGDM_PORT", "8000")))
    serve.add_argument("--data-dir", default=os.environ.get("FUZZYGDM_DATA_DIR", "./sessions"))
    serve.add_argument("--engine", default=os.environ.get("FUZZYGDM_ENGINE"))
    serve.add_argument("--feedback-engine", default=os.environ.get("FUZZYGDM_FEEDBACK_ENGINE"))
    serve.add_argument("--provider", choices=["builtin", "precomputed"],
                       default=os.environ.get("FUZZYGDM_PROVIDER", "builtin"))
    serve.add_argument("--signals", default=os.environ.get("FUZZYGDM_SIGNALS"))
    serve.add_argument("--sentiment-lexicon", default=os.environ.get("FUZZYGDM_SENTIMENT_LEXICON"))
    serve.add_argument("--emotion-lexicon", default=os.environ.get("FUZZYGDM_EMOTION_LEXICON"))
    serve.add_argument("--alpha", type=float, default=float(os.environ.get("FUZZYGDM_ALPHA", "0.6")))
    serve.add_argument("--beta", type=float, default=float(os.environ.get("FUZZYGDM_BETA", "0.4")))
    serve.add_argument("--static-dir", default=os.environ.get("FUZZYGDM_STATIC_DIR"))
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GdmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
