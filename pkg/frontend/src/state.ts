// Client-side session state: the latest snapshot plus this browser's identity.
// Poll responses can arrive out of order; anything older than what we already
// hold (by version, the service's event sequence number) is discarded.

import type { Snapshot } from "./types.js";

export interface ClientState {
  sessionId: string | null;
  participantId: string | null;
  snapshot: Snapshot | null;
}

export function initialState(): ClientState {
  return { sessionId: null, participantId: null, snapshot: null };
}

export function applySnapshot(state: ClientState, snapshot: Snapshot): boolean {
  if (state.snapshot && snapshot.version < state.snapshot.version) {
    return false;
  }
  state.snapshot = snapshot;
  state.sessionId = snapshot.session_id;
  return true;
}

export function hasSubmittedStances(state: ClientState): boolean {
  if (!state.snapshot || !state.participantId) return false;
  return state.participantId in state.snapshot.stances;
}

export function hasSubmittedFeedback(state: ClientState): boolean {
  if (!state.snapshot || !state.participantId) return false;
  return state.snapshot.feedback.some(
    (entry) => entry.participant_id === state.participantId,
  );
}

export function commentProblem(text: string): string | null {
  return text.trim().length === 0 ? "say something first" : null;
}
