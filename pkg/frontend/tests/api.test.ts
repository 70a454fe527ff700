// API client tests over a mocked fetch: correct wire shapes in, typed
// results and ServiceError out.  No real network is touched.

import { afterEach, describe, expect, it, vi } from "vitest";

import * as api from "../src/api.js";
import type { Snapshot } from "../src/types.js";
import fixture from "./fixtures/closed-session.json";

const snapshot = fixture as unknown as Snapshot;

function mockFetch(status: number, body: unknown): ReturnType<typeof vi.fn> {
  const mock = vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: async () => body,
  }));
  vi.stubGlobal("fetch", mock);
  return mock;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("getSnapshot", () => {
  it("returns the service payload untouched", async () => {
    const mock = mockFetch(200, snapshot);
    const result = await api.getSnapshot("demo-session");
    expect(mock).toHaveBeenCalledWith("/sessions/demo-session", expect.anything());
    // deep-equal with the fixture: the client added, removed, computed nothing
    expect(result).toEqual(snapshot);
  });

  it("maps error envelopes onto ServiceError", async () => {
    mockFetch(404, { code: "not_found", message: "unknown session 'x'" });
    await expect(api.getSnapshot("x")).rejects.toMatchObject({
      status: 404,
      code: "not_found",
      message: "unknown session 'x'",
    });
  });
});

describe("mutations", () => {
  it("posts stances with the participant id and stance map", async () => {
    const mock = mockFetch(200, { ok: true });
    await api.submitStances("s1", "p1", { price_per_week: 1, rating: -1 });
    const [url, init] = mock.mock.calls[0];
    expect(url).toBe("/sessions/s1/stances");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body)).toEqual({
      participant_id: "p1",
      stances: { price_per_week: 1, rating: -1 },
    });
  });

  it("posts comments and returns the scored comment as-is", async () => {
    const scored = snapshot.comments[0];
    const mock = mockFetch(200, { comment: scored });
    const result = await api.postComment("s1", "p1", "hotel1", "lovely");
    expect(result.comment).toEqual(scored);
    const [, init] = mock.mock.calls[0];
    expect(JSON.parse(init.body)).toEqual({
      participant_id: "p1",
      alternative_id: "hotel1",
      text: "lovely",
    });
  });

  it("posts feedback sliders and surfaces the computed value untouched", async () => {
    const entry = {
      participant_id: "p1",
      agreement: 10,
      confidence: 10,
      value: 8.32171,
    };
    mockFetch(200, { feedback: entry });
    const result = await api.submitFeedback("s1", "p1", 10, 10);
    // the feedback value comes from the service response, never local math
    expect(result.feedback.value).toBe(8.32171);
  });

  it("surfaces phase conflicts", async () => {
    mockFetch(409, { code: "phase_conflict", message: "wrong phase" });
    await expect(api.advancePhase("s1")).rejects.toMatchObject({
      status: 409,
      code: "phase_conflict",
    });
  });

  it("joins with a display name", async () => {
    const mock = mockFetch(200, { participant_id: "p1" });
    const result = await api.join("s1", "ana");
    expect(result.participant_id).toBe("p1");
    const [, init] = mock.mock.calls[0];
    expect(JSON.parse(init.body)).toEqual({ display_name: "ana" });
  });
});
