// Application shell: join/create screens, the 2-second polling loop and
// event wiring.  All state flows one way: service snapshot -> render.

import * as api from "./api.js";
import { applySnapshot, ClientState, commentProblem, initialState } from "./state.js";
import { escapeHtml, renderSession } from "./views.js";

export const POLL_INTERVAL_MS = 2000;

export class App {
  readonly state: ClientState = initialState();
  private root: HTMLElement;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(root: HTMLElement) {
    this.root = root;
  }

  start(): void {
    this.renderLobby();
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  private renderLobby(error?: string): void {
    this.root.innerHTML = `
      <div class="lobby">
        <h1>Group decision session</h1>
        ${error ? `<p class="error">${escapeHtml(error)}</p>` : ""}
        <form id="join-form">
          <input id="session-id" placeholder="session id" autocomplete="off">
          <input id="display-name" placeholder="your name" autocomplete="off">
          <button type="submit">Join</button>
        </form>
        <details>
          <summary>Create a new session</summary>
          <form id="create-form">
            <textarea id="alternatives-json"
              placeholder='[{"id": "hotel1", "price_per_week": 1165, ...}]'></textarea>
            <button type="submit">Create</button>
          </form>
        </details>
      </div>`;
    this.root.querySelector<HTMLFormElement>("#join-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        void this.join();
      },
    );
    this.root.querySelector<HTMLFormElement>("#create-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        void this.create();
      },
    );
  }

  private async join(): Promise<void> {
    const sessionId =
      this.root.querySelector<HTMLInputElement>("#session-id")!.value.trim();
    const name =
      this.root.querySelector<HTMLInputElement>("#display-name")!.value.trim();
    try {
      const joined = await api.join(sessionId, name);
      this.state.sessionId = sessionId;
      this.state.participantId = joined.participant_id;
      await this.refresh();
      this.timer = setInterval(() => void this.refresh(), POLL_INTERVAL_MS);
    } catch (error) {
      this.renderLobby(error instanceof Error ? error.message : String(error));
    }
  }

  private async create(): Promise<void> {
    const raw =
      this.root.querySelector<HTMLTextAreaElement>("#alternatives-json")!.value;
    try {
      const alternatives = JSON.parse(raw);
      const created = await api.createSession(alternatives);
      const input = this.root.querySelector<HTMLInputElement>("#session-id")!;
      input.value = created.session_id;
    } catch (error) {
      this.renderLobby(error instanceof Error ? error.message : String(error));
    }
  }

  async refresh(): Promise<void> {
    if (!this.state.sessionId) return;
    try {
      const snapshot = await api.getSnapshot(this.state.sessionId);
      if (applySnapshot(this.state, snapshot)) {
        this.renderSession();
      }
    } catch {
      // transient poll failures keep the last good snapshot on screen
    }
  }

  renderSession(): void {
    this.root.innerHTML = renderSession(this.state);
    this.wireSessionControls();
  }

  private wireSessionControls(): void {
    const stanceForm = this.root.querySelector<HTMLFormElement>("#stance-form");
    stanceForm?.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.sendStances(stanceForm);
    });
    const commentForm = this.root.querySelector<HTMLFormElement>("#comment-form");
    commentForm?.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.sendComment();
    });
    const feedbackForm = this.root.querySelector<HTMLFormElement>("#feedback-form");
    feedbackForm?.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.sendFeedback();
    });
    this.root.querySelector<HTMLButtonElement>("#advance")?.addEventListener(
      "click",
      () => void this.advance(),
    );
  }

  private async sendStances(form: HTMLFormElement): Promise<void> {
    const snapshot = this.state.snapshot!;
    const stances: Record<string, number> = {};
    for (const spec of snapshot.feature_specs) {
      const picked = form.querySelector<HTMLInputElement>(
        `input[name="stance-${spec.name}"]:checked`,
      );
      stances[spec.name] = picked ? Number(picked.value) : 0;
    }
    await this.guarded(() =>
      api.submitStances(this.state.sessionId!, this.state.participantId!, stances),
    );
  }

  private async sendComment(): Promise<void> {
    const select = this.root.querySelector<HTMLSelectElement>("#comment-alternative")!;
    const input = this.root.querySelector<HTMLInputElement>("#comment-text")!;
    const problem = commentProblem(input.value);
    if (problem !== null) {
      input.setCustomValidity(problem);
      input.reportValidity();
      return;
    }
    input.setCustomValidity("");
    const text = input.value.trim();
    await this.guarded(() =>
      api.postComment(
        this.state.sessionId!,
        this.state.participantId!,
        select.value,
        text,
      ),
    );
  }

  private async sendFeedback(): Promise<void> {
    const agreement = Number(
      this.root.querySelector<HTMLInputElement>("#agreement")!.value,
    );
    const confidence = Number(
      this.root.querySelector<HTMLInputElement>("#confidence")!.value,
    );
    await this.guarded(() =>
      api.submitFeedback(
        this.state.sessionId!,
        this.state.participantId!,
        agreement,
        confidence,
      ),
    );
  }

  private async advance(): Promise<void> {
    await this.guarded(() => api.advancePhase(this.state.sessionId!));
  }

  private async guarded(action: () => Promise<unknown>): Promise<void> {
    try {
      await action();
    } catch (error) {
      if (error instanceof api.ServiceError) {
        window.alert(`${error.code}: ${error.message}`);
      } else {
        throw error;
      }
    }
    await this.refresh();
  }
}
