// Thin typed client over the session service endpoints.

import type { Alternative, Comment, FeedbackEntry, Phase, Snapshot } from "./types.js";

export class ServiceError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    const code = typeof body?.code === "string" ? body.code : "error";
    const message = typeof body?.message === "string" ? body.message : response.statusText;
    throw new ServiceError(response.status, code, message);
  }
  return body as T;
}

export function createSession(
  alternatives: Alternative[],
  ownerToken?: string,
): Promise<{ session_id: string }> {
  return request("/sessions", {
    method: "POST",
    body: JSON.stringify({ alternatives, owner_token: ownerToken ?? null }),
  });
}

export function join(
  sessionId: string,
  displayName: string,
): Promise<{ participant_id: string }> {
  return request(`/sessions/${sessionId}/participants`, {
    method: "POST",
    body: JSON.stringify({ display_name: displayName }),
  });
}

export function submitStances(
  sessionId: string,
  participantId: string,
  stances: Record<string, number>,
): Promise<{ ok: boolean }> {
  return request(`/sessions/${sessionId}/stances`, {
    method: "POST",
    body: JSON.stringify({ participant_id: participantId, stances }),
  });
}

export function postComment(
  sessionId: string,
  participantId: string,
  alternativeId: string,
  text: string,
): Promise<{ comment: Comment }> {
  return request(`/sessions/${sessionId}/comments`, {
    method: "POST",
    body: JSON.stringify({
      participant_id: participantId,
      alternative_id: alternativeId,
      text,
    }),
  });
}

export function advancePhase(
  sessionId: string,
  ownerToken?: string,
): Promise<{ phase: Phase }> {
  return request(`/sessions/${sessionId}/advance`, {
    method: "POST",
    body: JSON.stringify({ owner_token: ownerToken ?? null }),
  });
}

export function submitFeedback(
  sessionId: string,
  participantId: string,
  agreement: number,
  confidence: number,
): Promise<{ feedback: FeedbackEntry }> {
  return request(`/sessions/${sessionId}/feedback`, {
    method: "POST",
    body: JSON.stringify({
      participant_id: participantId,
      agreement,
      confidence,
    }),
  });
}

export function getSnapshot(sessionId: string): Promise<Snapshot> {
  return request(`/sessions/${sessionId}`);
}
