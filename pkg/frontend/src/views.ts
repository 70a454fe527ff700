// Render functions: snapshot in, HTML string out.
//
// Every number shown here is copied from a service response field; the
// raw payload value is also attached as a data-raw attribute so tests can
// verify nothing was recomputed client-side.  Controls for phases other
// than the current one are not rendered.

import type { Consensus, Report, Snapshot } from "./types.js";
import type { ClientState } from "./state.js";
import { hasSubmittedFeedback, hasSubmittedStances } from "./state.js";

export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function score(value: number, decimals = 2): string {
  return `<span class="score" data-raw="${String(value)}">${value.toFixed(decimals)}</span>`;
}

export function renderPhaseBadge(snapshot: Snapshot): string {
  return `<span class="phase-badge phase-${snapshot.phase}">${snapshot.phase}</span>`;
}

export function renderParticipants(snapshot: Snapshot): string {
  const items = snapshot.participants
    .map((p) => `<li>${escapeHtml(p.display_name)} <code>${escapeHtml(p.id)}</code></li>`)
    .join("");
  return `<ul class="participants">${items}</ul>`;
}

export function renderStanceForm(state: ClientState): string {
  const snapshot = state.snapshot!;
  if (hasSubmittedStances(state)) {
    return `<p class="done">Your stances are in. Waiting for the others.</p>`;
  }
  const rows = snapshot.feature_specs
    .map((spec) => {
      const options = [-1, 0, 1]
        .map(
          (value) => `
            <label class="stance-option">
              <input type="radio" name="stance-${escapeHtml(spec.name)}"
                     value="${value}" ${value === 0 ? "checked" : ""}>
              <span>${value === -1 ? "against" : value === 0 ? "neutral" : "for"}</span>
            </label>`,
        )
        .join("");
      return `
        <tr>
          <td class="feature-name">${escapeHtml(spec.name)}</td>
          <td>${options}</td>
        </tr>`;
    })
    .join("");
  return `
    <form id="stance-form">
      <table class="stance-table"><tbody>${rows}</tbody></table>
      <button type="submit">Submit stances</button>
    </form>`;
}

export function renderCommentStream(state: ClientState): string {
  const snapshot = state.snapshot!;
  const options = snapshot.alternatives
    .map((alt) => `<option value="${escapeHtml(alt.id)}">${escapeHtml(alt.id)}</option>`)
    .join("");
  const comments = snapshot.comments
    .map((comment) => {
      const badge =
        comment.dominant_emotion === null
          ? ""
          : `<span class="emotion-badge">${escapeHtml(comment.dominant_emotion)}</span>`;
      return `
        <li class="comment">
          <span class="author">${escapeHtml(comment.participant_id)}</span>
          <span class="target">${escapeHtml(comment.alternative_id)}</span>
          <span class="text">${escapeHtml(comment.text)}</span>
          <span class="sentiment-badge">${score(comment.sentiment, 4)}</span>
          ${badge}
        </li>`;
    })
    .join("");
  return `
    <form id="comment-form">
      <select id="comment-alternative">${options}</select>
      <input id="comment-text" type="text" placeholder="Say something about it"
             autocomplete="off">
      <button type="submit">Post</button>
    </form>
    <ul class="comments">${comments}</ul>`;
}

export function renderResultsBoard(report: Report): string {
  const rows = [...report.results]
    .sort((a, b) => a.rank - b.rank)
    .map(
      (result) => `
        <tr class="${result.alternative_id === report.winner ? "winner" : ""}">
          <td>${result.rank}</td>
          <td>${escapeHtml(result.alternative_id)}</td>
          <td>${score(result.voting_score)}</td>
          <td>${score(result.total_sentiment, 4)}</td>
          <td>${score(result.fuzzy_score)}</td>
        </tr>`,
    )
    .join("");
  return `
    <table class="results-board">
      <thead>
        <tr><th>Rank</th><th>Alternative</th><th>Voting</th>
            <th>Sentiment</th><th>Fuzzy score</th></tr>
      </thead>
      <tbody>${rows}</tbody>
    </table>
    <p class="winner-line">Winner: <strong>${escapeHtml(report.winner)}</strong></p>`;
}

export function renderFeedbackPanel(state: ClientState): string {
  if (hasSubmittedFeedback(state)) {
    const entry = state.snapshot!.feedback.find(
      (e) => e.participant_id === state.participantId,
    )!;
    return `<p class="done">Feedback noted. Your feedback value: ${score(entry.value)}</p>`;
  }
  return `
    <form id="feedback-form">
      <label>Agreement
        <input id="agreement" type="range" min="0" max="10" step="0.1" value="5">
      </label>
      <label>Confidence
        <input id="confidence" type="range" min="0" max="10" step="0.1" value="5">
      </label>
      <button type="submit">Send feedback</button>
    </form>`;
}

export function renderConsensusBanner(consensus: Consensus): string {
  return `
    <div class="consensus-banner consensus-${consensus.level}">
      Consensus: <strong>${consensus.level}</strong>
      (mean ${score(consensus.mean)}, IQR ${score(consensus.iqr)})
    </div>`;
}

export function renderSession(state: ClientState): string {
  const snapshot = state.snapshot;
  if (!snapshot) {
    return `<p class="empty">Not connected to a session.</p>`;
  }
  const sections: string[] = [
    `<header>
       <h1>Session <code>${escapeHtml(snapshot.session_id)}</code></h1>
       ${renderPhaseBadge(snapshot)}
     </header>`,
    renderParticipants(snapshot),
  ];
  switch (snapshot.phase) {
    case "setup":
      sections.push(`<p class="hint">Waiting for the session to open for voting.</p>`);
      break;
    case "voting":
      sections.push(renderStanceForm(state));
      break;
    case "discussion":
      sections.push(renderCommentStream(state));
      break;
    case "results":
      sections.push(renderResultsBoard(snapshot.report!));
      break;
    case "feedback":
      sections.push(renderResultsBoard(snapshot.report!));
      sections.push(renderFeedbackPanel(state));
      break;
    case "closed":
      sections.push(renderConsensusBanner(snapshot.consensus!));
      sections.push(renderResultsBoard(snapshot.report!));
      break;
  }
  sections.push(
    `<footer><button id="advance">Advance phase</button></footer>`,
  );
  return `<div class="session">${sections.join("\n")}</div>`;
}
