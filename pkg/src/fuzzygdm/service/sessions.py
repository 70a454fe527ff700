"""Event-sourced group-decision sessions.

Every mutation appends one event to a per-session JSON-lines log; session
state is a pure fold over that log, so replaying it reconstructs the state
byte-for-byte.  Values that depend on configuration (comment scores,
feedback values, the decision report) are computed once at ingestion and
stored in the event payload, which keeps replay exact even if lexicons or
engines change later.

Within a session mutations serialize through one lock; reads hand out the
most recent immutable snapshot without taking it.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Sequence

from ..errors import (
    DuplicateError,
    NotFoundError,
    PhaseError,
    ValidationError,
)
from ..feedback import consensus, feedback_value
from ..fuzzy.engine import InferenceEngine
from ..pipeline import run_pipeline
from ..textsignals.providers import PrecomputedSignalProvider, SignalProvider
from ..textsignals.signals import (
    DiscussionSignal,
    EmotionVector,
    FusionWeights,
    collapse_per_participant,
)
from ..voting import AlternativeProfile, ExpertPreferenceVector, FeatureSpec

PHASES = ("setup", "voting", "discussion", "results", "feedback", "closed")

SNAPSHOT_EVERY = 20

EVENT_SESSION_CREATED = "session-created"
EVENT_PARTICIPANT_JOINED = "participant-joined"
EVENT_STANCE_SUBMITTED = "stance-submitted"
EVENT_COMMENT_POSTED = "comment-posted"
EVENT_PHASE_ADVANCED = "phase-advanced"
EVENT_FEEDBACK_SUBMITTED = "feedback-submitted"


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class SessionEvent:
    seq: int
    kind: str
    timestamp: str
    payload: Mapping[str, Any]

    def to_dict(self) -> dict:
        return {"seq": self.seq, "kind": self.kind, "ts": self.timestamp,
                "payload": dict(self.payload)}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SessionEvent":
        return cls(seq=int(data["seq"]), kind=data["kind"],
                   timestamp=data["ts"], payload=data["payload"])


def spec_to_dict(spec: FeatureSpec) -> dict:
    doc: dict[str, Any] = {"name": spec.name, "kind": spec.kind}
    if spec.direction is not None:
        doc["direction"] = spec.direction
    if spec.coding is not None:
        doc["coding"] = dict(spec.coding)
    return doc


def spec_from_dict(doc: Mapping[str, Any]) -> FeatureSpec:
    return FeatureSpec(
        name=doc["name"],
        kind=doc["kind"],
        direction=doc.get("direction"),
        coding=doc.get("coding"),
    )


class SessionState:
    """Materialized view of one session's event log."""

    def __init__(self) -> None:
        self.session_id = ""
        self.phase = "setup"
        self.owner_token: str | None = None
        self.feature_specs: tuple[FeatureSpec, ...] = ()
        self.alternatives: tuple[AlternativeProfile, ...] = ()
        self.participants: list[dict] = []
        self.stances: dict[str, dict[str, int]] = {}
        self.comments: list[dict] = []
        self.report: dict | None = None
        self.feedback: list[dict] = []
        self.consensus: dict | None = None
        self.version = 0

    # -- event fold -------------------------------------------------------

    def apply(self, event: SessionEvent) -> None:
        if event.seq != self.version + 1:
            raise ValidationError(
                f"event {event.seq} out of order (state at {self.version})"
            )
        handler = {
            EVENT_SESSION_CREATED: self._on_created,
            EVENT_PARTICIPANT_JOINED: self._on_joined,
            EVENT_STANCE_SUBMITTED: self._on_stances,
            EVENT_COMMENT_POSTED: self._on_comment,
            EVENT_PHASE_ADVANCED: self._on_advanced,
            EVENT_FEEDBACK_SUBMITTED: self._on_feedback,
        }.get(event.kind)
        if handler is None:
            raise ValidationError(f"unknown event kind {event.kind!r}")
        handler(event)
        self.version = event.seq

    def _on_created(self, event: SessionEvent) -> None:
        payload = event.payload
        self.session_id = payload["session_id"]
        self.owner_token = payload.get("owner_token")
        self.feature_specs = tuple(spec_from_dict(d) for d in payload["feature_specs"])
        self.alternatives = tuple(
            AlternativeProfile(id=a["id"], values={k: v for k, v in a.items() if k != "id"})
            for a in payload["alternatives"]
        )

    def _on_joined(self, event: SessionEvent) -> None:
        self.participants.append(
            {
                "id": event.payload["participant_id"],
                "display_name": event.payload["display_name"],
                "joined_at": event.timestamp,
            }
        )

    def _on_stances(self, event: SessionEvent) -> None:
        self.stances[event.payload["participant_id"]] = dict(event.payload["stances"])

    def _on_comment(self, event: SessionEvent) -> None:
        payload = event.payload
        self.comments.append(
            {
                "participant_id": payload["participant_id"],
                "alternative_id": payload["alternative_id"],
                "text": payload["text"],
                "timestamp": event.timestamp,
                "sentiment": payload["sentiment"],
                "emotions": dict(payload["emotions"]),
                "dominant_emotion": payload["dominant_emotion"],
            }
        )

    def _on_advanced(self, event: SessionEvent) -> None:
        self.phase = event.payload["phase"]
        if "report" in event.payload:
            self.report = event.payload["report"]
        if "consensus" in event.payload:
            self.consensus = event.payload["consensus"]

    def _on_feedback(self, event: SessionEvent) -> None:
        payload = event.payload
        self.feedback.append(
            {
                "participant_id": payload["participant_id"],
                "agreement": payload["agreement"],
                "confidence": payload["confidence"],
                "value": payload["value"],
            }
        )

    # -- queries ----------------------------------------------------------

    def participant_ids(self) -> set[str]:
        return {p["id"] for p in self.participants}

    def alternative_ids(self) -> set[str]:
        return {a.id for a in self.alternatives}

    def snapshot(self) -> dict:
        """JSON-serializable view; canonical form is byte-stable."""
        return {
            "session_id": self.session_id,
            "phase": self.phase,
            "version": self.version,
            "feature_specs": [spec_to_dict(s) for s in self.feature_specs],
            "alternatives": [
                {"id": a.id, **{k: a.values[k] for k in sorted(a.values)}}
                for a in self.alternatives
            ],
            "participants": list(self.participants),
            "stances": {p: dict(v) for p, v in sorted(self.stances.items())},
            "comments": list(self.comments),
            "report": self.report,
            "feedback": list(self.feedback),
            "consensus": self.consensus,
        }


def canonical_snapshot_bytes(snapshot: Mapping[str, Any]) -> bytes:
    return json.dumps(snapshot, sort_keys=True, separators=(",", ":")).encode("utf-8")


def replay(events: Sequence[SessionEvent]) -> SessionState:
    state = SessionState()
    for event in events:
        state.apply(event)
    return state


@dataclass
class ServiceContext:
    """Engines, signal provider and fusion weights shared by all sessions."""

    engine: InferenceEngine
    feedback_engine: InferenceEngine
    provider: SignalProvider
    weights: FusionWeights = field(default_factory=FusionWeights)


class SessionStore:
    """All live sessions plus their durable logs under one data directory."""

    def __init__(self, data_dir: str | Path, context: ServiceContext) -> None:
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.context = context
        self._lock = threading.Lock()
        self._sessions: dict[str, SessionState] = {}
        self._events: dict[str, list[SessionEvent]] = {}
        self._session_locks: dict[str, threading.Lock] = {}
        self._snapshots: dict[str, dict] = {}
        self._load_existing()

    # -- persistence ------------------------------------------------------

    def _log_path(self, session_id: str) -> Path:
        return self.data_dir / f"{session_id}.events.jsonl"

    def _snapshot_path(self, session_id: str) -> Path:
        return self.data_dir / f"{session_id}.snapshot.json"

    def _load_existing(self) -> None:
        for log_path in sorted(self.data_dir.glob("*.events.jsonl")):
            events = []
            with open(log_path, encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if line:
                        events.append(SessionEvent.from_dict(json.loads(line)))
            if not events:
                continue
            state = replay(events)
            self._register(state, events)

    def _register(self, state: SessionState, events: list[SessionEvent]) -> None:
        session_id = state.session_id
        self._sessions[session_id] = state
        self._events[session_id] = events
        self._session_locks[session_id] = threading.Lock()
        self._snapshots[session_id] = state.snapshot()

    def _append(self, state: SessionState, event: SessionEvent) -> None:
        """Apply and persist; caller holds the session lock."""
        state.apply(event)
        self._events[state.session_id].append(event)
        with open(self._log_path(state.session_id), "a", encoding="utf-8") as handle:
            handle.write(json.dumps(event.to_dict(), sort_keys=True) + "\n")
        snapshot = state.snapshot()
        self._snapshots[state.session_id] = snapshot
        if event.seq % SNAPSHOT_EVERY == 0 or state.phase == "closed":
            tmp = self._snapshot_path(state.session_id).with_suffix(".tmp")
            tmp.write_text(
                json.dumps(snapshot, sort_keys=True, indent=2) + "\n", encoding="utf-8"
            )
            tmp.replace(self._snapshot_path(state.session_id))

    # -- helpers ----------------------------------------------------------

    def _state(self, session_id: str) -> SessionState:
        state = self._sessions.get(session_id)
        if state is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return state

    def _session_lock(self, session_id: str) -> threading.Lock:
        lock = self._session_locks.get(session_id)
        if lock is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return lock

    @staticmethod
    def _require_phase(state: SessionState, phase: str) -> None:
        if state.phase != phase:
            raise PhaseError(
                f"operation allowed in phase {phase!r}, session is in {state.phase!r}"
            )

    def events(self, session_id: str) -> list[SessionEvent]:
        self._state(session_id)
        return list(self._events[session_id])

    # -- operations -------------------------------------------------------

    def create_session(
        self,
        alternatives: Sequence[Mapping[str, Any]],
        feature_specs: Sequence[Mapping[str, Any]] | None = None,
        owner_token: str | None = None,
    ) -> str:
        from ..voting import hotel_feature_specs

        specs = (
            tuple(spec_from_dict(d) for d in feature_specs)
            if feature_specs
            else hotel_feature_specs()
        )
        if not alternatives:
            raise ValidationError("a session needs at least one alternative")
        profiles = []
        seen_ids = set()
        for doc in alternatives:
            if "id" not in doc:
                raise ValidationError("every alternative needs an 'id'")
            if doc["id"] in seen_ids:
                raise ValidationError(f"duplicate alternative id {doc['id']!r}")
            seen_ids.add(doc["id"])
            profile = AlternativeProfile(
                id=doc["id"], values={k: v for k, v in doc.items() if k != "id"}
            )
            profile.validate_against(specs)
            profiles.append(profile)

        session_id = uuid.uuid4().hex[:12]
        event = SessionEvent(
            seq=1,
            kind=EVENT_SESSION_CREATED,
            timestamp=_utcnow(),
            payload={
                "session_id": session_id,
                "owner_token": owner_token,
                "feature_specs": [spec_to_dict(s) for s in specs],
                "alternatives": [
                    {"id": p.id, **{k: p.values[k] for k in sorted(p.values)}}
                    for p in profiles
                ],
            },
        )
        state = SessionState()
        with self._lock:
            self._sessions[session_id] = state
            self._events[session_id] = []
            self._session_locks[session_id] = threading.Lock()
            self._append(state, event)
        return session_id

    def join(self, session_id: str, display_name: str) -> str:
        display_name = (display_name or "").strip()
        if not display_name:
            raise ValidationError("display name must not be empty")
        with self._session_lock(session_id):
            state = self._state(session_id)
            self._require_phase(state, "setup")
            participant_id = f"p{len(state.participants) + 1}"
            event = SessionEvent(
                seq=state.version + 1,
                kind=EVENT_PARTICIPANT_JOINED,
                timestamp=_utcnow(),
                payload={"participant_id": participant_id, "display_name": display_name},
            )
            self._append(state, event)
        return participant_id

    def submit_stances(
        self, session_id: str, participant_id: str, stances: Mapping[str, int]
    ) -> None:
        with self._session_lock(session_id):
            state = self._state(session_id)
            self._require_phase(state, "voting")
            if participant_id not in state.participant_ids():
                raise NotFoundError(f"unknown participant {participant_id!r}")
            if participant_id in state.stances:
                raise DuplicateError(f"participant {participant_id!r} already voted")
            expected = {s.name for s in state.feature_specs}
            if set(stances) != expected:
                raise ValidationError(
                    f"stances must cover exactly the features {sorted(expected)}"
                )
            # raises ValidationError for values outside {-1, 0, 1}
            ExpertPreferenceVector(participant_id=participant_id, stances=dict(stances))
            event = SessionEvent(
                seq=state.version + 1,
                kind=EVENT_STANCE_SUBMITTED,
                timestamp=_utcnow(),
                payload={
                    "participant_id": participant_id,
                    "stances": {k: int(v) for k, v in stances.items()},
                },
            )
            self._append(state, event)

    def post_comment(
        self, session_id: str, participant_id: str, alternative_id: str, text: str
    ) -> dict:
        if not (text or "").strip():
            raise ValidationError("comment text must not be empty")
        with self._session_lock(session_id):
            state = self._state(session_id)
            self._require_phase(state, "discussion")
            if participant_id not in state.participant_ids():
                raise NotFoundError(f"unknown participant {participant_id!r}")
            if alternative_id not in state.alternative_ids():
                raise NotFoundError(f"unknown alternative {alternative_id!r}")
            sentiment, emotions = self.context.provider.comment_scores(
                participant_id, alternative_id, text
            )
            event = SessionEvent(
                seq=state.version + 1,
                kind=EVENT_COMMENT_POSTED,
                timestamp=_utcnow(),
                payload={
                    "participant_id": participant_id,
                    "alternative_id": alternative_id,
                    "text": text,
                    "sentiment": sentiment,
                    "emotions": emotions.as_dict(),
                    "dominant_emotion": emotions.dominant(),
                },
            )
            self._append(state, event)
            return state.comments[-1]

    def advance_phase(self, session_id: str, owner_token: str | None = None) -> str:
        with self._session_lock(session_id):
            state = self._state(session_id)
            if state.owner_token is not None and owner_token != state.owner_token:
                raise PermissionError("owner token required to advance this session")
            index = PHASES.index(state.phase)
            if index == len(PHASES) - 1:
                raise PhaseError("session is already closed")
            next_phase = PHASES[index + 1]
            payload: dict[str, Any] = {"phase": next_phase}
            if next_phase == "results":
                payload["report"] = self._compute_report(state)
            if next_phase == "closed":
                payload["consensus"] = self._compute_consensus(state)
            event = SessionEvent(
                seq=state.version + 1,
                kind=EVENT_PHASE_ADVANCED,
                timestamp=_utcnow(),
                payload=payload,
            )
            self._append(state, event)
            return next_phase

    def submit_feedback(
        self, session_id: str, participant_id: str, agreement: float, confidence: float
    ) -> dict:
        with self._session_lock(session_id):
            state = self._state(session_id)
            self._require_phase(state, "feedback")
            if participant_id not in state.participant_ids():
                raise NotFoundError(f"unknown participant {participant_id!r}")
            if any(entry["participant_id"] == participant_id for entry in state.feedback):
                raise DuplicateError(
                    f"participant {participant_id!r} already submitted feedback"
                )
            agreement = min(10.0, max(0.0, float(agreement)))
            confidence = min(10.0, max(0.0, float(confidence)))
            value = feedback_value(agreement, confidence, self.context.feedback_engine)
            event = SessionEvent(
                seq=state.version + 1,
                kind=EVENT_FEEDBACK_SUBMITTED,
                timestamp=_utcnow(),
                payload={
                    "participant_id": participant_id,
                    "agreement": agreement,
                    "confidence": confidence,
                    "value": value,
                },
            )
            self._append(state, event)
            return state.feedback[-1]

    def get_snapshot(self, session_id: str) -> dict:
        snapshot = self._snapshots.get(session_id)
        if snapshot is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return snapshot

    def get_report(self, session_id: str) -> dict:
        state = self._state(session_id)
        if state.report is None:
            raise PhaseError("report is available from the results phase onward")
        return state.report

    # -- derived computations ---------------------------------------------

    def _compute_report(self, state: SessionState) -> dict:
        experts = [
            ExpertPreferenceVector(participant_id=pid, stances=row)
            for pid, row in sorted(state.stances.items())
        ]
        if not experts:
            raise ValidationError("cannot compute results: nobody voted")
        report = run_pipeline(
            alternatives=state.alternatives,
            specs=state.feature_specs,
            experts=experts,
            signals=self._report_signals(state),
            engine=self.context.engine,
            weights=self.context.weights,
        )
        return report.to_dict()

    def _report_signals(self, state: SessionState) -> list[DiscussionSignal]:
        provider = self.context.provider
        if isinstance(provider, PrecomputedSignalProvider):
            return provider.signals()
        per_comment = [
            DiscussionSignal(
                participant_id=c["participant_id"],
                alternative_id=c["alternative_id"],
                sentiment=c["sentiment"],
                emotions=EmotionVector.from_dict(c["emotions"]),
            )
            for c in state.comments
        ]
        return collapse_per_participant(per_comment)

    def _compute_consensus(self, state: SessionState) -> dict:
        values = [entry["value"] for entry in state.feedback]
        return consensus(values).to_dict()
