"""HTTP surface for live sessions.

Endpoints
---------
POST /sessions                       create a session
POST /sessions/{id}/participants     join
POST /sessions/{id}/stances          submit a stance vector (voting phase)
POST /sessions/{id}/comments         post a discussion comment (scored live)
POST /sessions/{id}/advance          move to the next phase
POST /sessions/{id}/feedback         submit agreement/confidence ratings
GET  /sessions/{id}                  full state snapshot
GET  /sessions/{id}/report           decision report (results phase onward)

Errors come back as ``{"code": ..., "message": ...}`` with 404 for unknown
ids, 409 for phase violations and duplicate submissions, 422 for bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from ..errors import (
    DuplicateError,
    GdmError,
    NoDiscussionSignalError,
    NotFoundError,
    PhaseError,
    ValidationError,
)
from ..fuzzy.engine import DomainError, NoRuleFiredError, UnknownVariableError
from ..fuzzy.loader import load_bundled_engine, load_engine
from ..textsignals.emotions import EmotionScorer
from ..textsignals.providers import BuiltinLexiconProvider, PrecomputedSignalProvider
from ..textsignals.sentiment import SentimentScorer
from ..textsignals.signals import FusionWeights
from .sessions import ServiceContext, SessionStore

_STATUS_BY_ERROR: tuple[tuple[type[Exception], int, str], ...] = (
    (NotFoundError, 404, "not_found"),
    (PhaseError, 409, "phase_conflict"),
    (DuplicateError, 409, "conflict"),
    (PermissionError, 403, "forbidden"),
    (NoDiscussionSignalError, 422, "validation"),
    (DomainError, 422, "validation"),
    (NoRuleFiredError, 422, "validation"),
    (UnknownVariableError, 422, "validation"),
    (ValidationError, 422, "validation"),
    (GdmError, 422, "validation"),
)


@dataclass
class ServiceConfig:
    """Runtime configuration; every field maps to a CLI flag or env var."""

    data_dir: str | Path = "./sessions"
    engine_path: str | Path | None = None
    feedback_engine_path: str | Path | None = None
    provider: str = "builtin"
    signals_path: str | Path | None = None
    sentiment_lexicon: str | Path | None = None
    emotion_lexicon: str | Path | None = None
    alpha: float = 0.6
    beta: float = 0.4
    static_dir: str | Path | None = None


def build_context(config: ServiceConfig) -> ServiceContext:
    engine = (
        load_engine(config.engine_path)
        if config.engine_path
        else load_bundled_engine("total_preference")
    )
    feedback_engine = (
        load_engine(config.feedback_engine_path)
        if config.feedback_engine_path
        else load_bundled_engine("feedback")
    )
    if config.provider == "precomputed":
        if not config.signals_path:
            raise ValidationError("precomputed provider needs a signals file")
        provider = PrecomputedSignalProvider.from_path(config.signals_path)
    elif config.provider == "builtin":
        provider = BuiltinLexiconProvider(
            sentiment_scorer=(
                SentimentScorer.from_path(config.sentiment_lexicon)
                if config.sentiment_lexicon
                else SentimentScorer()
            ),
            emotion_scorer=(
                EmotionScorer.from_path(config.emotion_lexicon)
                if config.emotion_lexicon
                else EmotionScorer()
            ),
        )
    else:
        raise ValidationError(f"unknown provider {config.provider!r}")
    return ServiceContext(
        engine=engine,
        feedback_engine=feedback_engine,
        provider=provider,
        weights=FusionWeights(alpha=config.alpha, beta=config.beta),
    )


class CreateSessionRequest(BaseModel):
    alternatives: list[dict]
    feature_specs: list[dict] | None = None
    owner_token: str | None = None


class JoinRequest(BaseModel):
    display_name: str


class StancesRequest(BaseModel):
    participant_id: str
    stances: Mapping[str, int]


class CommentRequest(BaseModel):
    participant_id: str
    alternative_id: str
    text: str


class AdvanceRequest(BaseModel):
    owner_token: str | None = None


class FeedbackRequest(BaseModel):
    participant_id: str
    agreement: float
    confidence: float


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    store = SessionStore(config.data_dir, build_context(config))

    app = FastAPI(title="fuzzygdm session service")
    app.state.store = store
    app.state.config = config

    def _error_response(exc: Exception) -> JSONResponse:
        for error_type, status, code in _STATUS_BY_ERROR:
            if isinstance(exc, error_type):
                return JSONResponse(
                    status_code=status, content={"code": code, "message": str(exc)}
                )
        raise exc

    for registered in (GdmError, PermissionError):
        @app.exception_handler(registered)
        async def handle_error(request: Request, exc: Exception) -> JSONResponse:
            return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def handle_request_validation(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return JSONResponse(
            status_code=422, content={"code": "validation", "message": str(exc.errors())}
        )

    @app.post("/sessions")
    def create_session(body: CreateSessionRequest) -> dict[str, Any]:
        session_id = store.create_session(
            alternatives=body.alternatives,
            feature_specs=body.feature_specs,
            owner_token=body.owner_token,
        )
        return {"session_id": session_id}

    @app.post("/sessions/{session_id}/participants")
    def join(session_id: str, body: JoinRequest) -> dict[str, Any]:
        participant_id = store.join(session_id, body.display_name)
        return {"participant_id": participant_id}

    @app.post("/sessions/{session_id}/stances")
    def submit_stances(session_id: str, body: StancesRequest) -> dict[str, Any]:
        store.submit_stances(session_id, body.participant_id, body.stances)
        return {"ok": True}

    @app.post("/sessions/{session_id}/comments")
    def post_comment(session_id: str, body: CommentRequest) -> dict[str, Any]:
        comment = store.post_comment(
            session_id, body.participant_id, body.alternative_id, body.text
        )
        return {"comment": comment}

    @app.post("/sessions/{session_id}/advance")
    def advance(session_id: str, body: AdvanceRequest | None = None) -> dict[str, Any]:
        token = body.owner_token if body else None
        phase = store.advance_phase(session_id, owner_token=token)
        return {"phase": phase}

    @app.post("/sessions/{session_id}/feedback")
    def submit_feedback(session_id: str, body: FeedbackRequest) -> dict[str, Any]:
        entry = store.submit_feedback(
            session_id, body.participant_id, body.agreement, body.confidence
        )
        return {"feedback": entry}

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str) -> dict[str, Any]:
        return store.get_snapshot(session_id)

    @app.get("/sessions/{session_id}/report")
    def get_report(session_id: str) -> dict[str, Any]:
        return store.get_report(session_id)

    static_dir = Path(config.static_dir) if config.static_dir else None
    if static_dir and static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
