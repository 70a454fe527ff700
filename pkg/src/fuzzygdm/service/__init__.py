from .app import ServiceConfig, build_context, create_app
from .sessions import (
    PHASES,
    ServiceContext,
    SessionEvent,
    SessionState,
    SessionStore,
    canonical_snapshot_bytes,
    replay,
)

__all__ = [
    "PHASES",
    "ServiceConfig",
    "ServiceContext",
    "SessionEvent",
    "SessionState",
    "SessionStore",
    "build_context",
    "canonical_snapshot_bytes",
    "create_app",
    "replay",
]
