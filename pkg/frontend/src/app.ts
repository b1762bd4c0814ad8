/**
 * Application wiring: controls mutate the state, the state drives one
 * debounced fetch at a time, and responses are applied newest-wins so a
 * stale response can never overwrite a newer one. On network failure the
 * last good panels stay up behind a stale-data banner.
 */

import { ApiClient, ApiError, ExtremePriorError } from "./api.js";
import {
  renderExtremePriorNotice,
  renderPanels,
  renderReadouts,
  setStaleBanner,
} from "./panels.js";
import { pinComparison, renderPinboard } from "./pinboard.js";
import {
  DEFAULT_STATE,
  ExplorerState,
  METHOD_TABS,
  MethodTab,
  epsilonToSlider,
  readStateFromLocation,
  sliderToEpsilon,
  writeStateToLocation,
} from "./state.js";
import type { ExplainResponse } from "./types.js";

const DEBOUNCE_MS = 150;

export interface AppElements {
  epsilonSlider: HTMLInputElement;
  epsilonLabel: HTMLElement;
  priorSlider: HTMLInputElement;
  priorLabel: HTMLElement;
  seedInput: HTMLInputElement;
  scenarioSelect: HTMLSelectElement;
  tabs: HTMLElement;
  readouts: HTMLElement;
  panels: HTMLElement;
  pinboard: HTMLElement;
  pinButton: HTMLButtonElement;
  staleBanner: HTMLElement;
}

export class ExplorerApp {
  state: ExplorerState;
  lastGood: ExplainResponse | null = null;

  private requestCounter = 0;
  private appliedRequest = 0;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private api: ApiClient,
    private elements: AppElements,
    initial?: ExplorerState,
  ) {
    this.state = initial ?? { ...DEFAULT_STATE, pins: [] };
  }

  /** Apply a payload to the DOM. Exposed for tests driving mock payloads. */
  applyPayload(payload: ExplainResponse): void {
    this.lastGood = payload;
    setStaleBanner(this.elements.staleBanner, false);
    renderReadouts(this.elements.readouts, payload);
    renderPanels(this.elements.panels, payload);
  }

  syncControls(): void {
    const { elements, state } = this;
    elements.epsilonSlider.value = String(epsilonToSlider(state.epsilon));
    elements.epsilonLabel.textContent = String(state.epsilon);
    elements.priorSlider.value = String(state.priorNo);
    elements.priorLabel.textContent = String(state.priorNo);
    elements.seedInput.value = String(state.seed);
    if (elements.scenarioSelect.options.length > 0) {
      elements.scenarioSelect.value = state.scenarioId;
    }
    for (const tab of Array.from(elements.tabs.children) as HTMLElement[]) {
      tab.classList.toggle("active", tab.dataset.method === state.method);
    }
    renderPinboard(this.elements.pinboard, this.state.pins);
  }

  /** Debounced state-change entry point used by every control. */
  update(change: Partial<ExplorerState>): void {
    Object.assign(this.state, change);
    writeStateToLocation(this.state);
    this.syncControls();
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.refresh();
    }, DEBOUNCE_MS);
  }

  async refresh(): Promise<void> {
    const requestId = ++this.requestCounter;
    try {
      const payload = await this.api.explain(this.state);
      if (requestId < this.requestCounter || requestId <= this.appliedRequest) {
        return; // a newer request exists or was already applied
      }
      this.appliedRequest = requestId;
      this.applyPayload(payload);
    } catch (error) {
      if (requestId < this.requestCounter) return;
      this.appliedRequest = requestId;
      if (error instanceof ExtremePriorError) {
        renderExtremePriorNotice(this.elements.panels, error.detail);
        setStaleBanner(this.elements.staleBanner, false);
      } else if (error instanceof ApiError) {
        setStaleBanner(this.elements.staleBanner, true, `API error ${error.status}`);
      } else {
        // network failure: keep the last good panels
        setStaleBanner(this.elements.staleBanner, true);
      }
    }
  }

  pinCurrent(): void {
    if (this.lastGood === null) return;
    if (pinComparison(this.state, this.lastGood)) {
      writeStateToLocation(this.state);
      renderPinboard(this.elements.pinboard, this.state.pins);
    }
  }

  async start(): Promise<void> {
    const { elements } = this;

    elements.epsilonSlider.addEventListener("input", () => {
      this.update({ epsilon: sliderToEpsilon(Number(elements.epsilonSlider.value)) });
    });
    elements.priorSlider.addEventListener("input", () => {
      this.update({ priorNo: Number(elements.priorSlider.value) });
    });
    elements.seedInput.addEventListener("change", () => {
      const seed = Number(elements.seedInput.value);
      if (Number.isInteger(seed) && seed >= 0) this.update({ seed });
    });
    elements.scenarioSelect.addEventListener("change", () => {
      this.update({ scenarioId: elements.scenarioSelect.value });
    });
    elements.pinButton.addEventListener("click", () => this.pinCurrent());

    for (const method of METHOD_TABS) {
      const tab = document.createElement("button");
      tab.className = "tab";
      tab.dataset.method = method;
      tab.textContent = method.replace(/_/g, " ");
      tab.addEventListener("click", () => this.update({ method: method as MethodTab }));
      elements.tabs.appendChild(tab);
    }

    try {
      const scenarios = await this.api.scenarios();
      elements.scenarioSelect.replaceChildren(
        ...scenarios.map((s) => {
          const option = document.createElement("option");
          option.value = s.id;
          option.textContent = `${s.id} (${s.adversary_label})`;
          return option;
        }),
      );
    } catch {
      setStaleBanner(elements.staleBanner, true, "could not list scenarios");
    }

    this.syncControls();
    await this.refresh();
  }
}

export function bootstrap(baseUrl = ""): ExplorerApp {
  const byId = <T extends HTMLElement>(id: string) =>
    document.getElementById(id) as T;
  const app = new ExplorerApp(
    new ApiClient(baseUrl),
    {
      epsilonSlider: byId<HTMLInputElement>("epsilon-slider"),
      epsilonLabel: byId("epsilon-label"),
      priorSlider: byId<HTMLInputElement>("prior-slider"),
      priorLabel: byId("prior-label"),
      seedInput: byId<HTMLInputElement>("seed-input"),
      scenarioSelect: byId<HTMLSelectElement>("scenario-select"),
      tabs: byId("method-tabs"),
      readouts: byId("readouts"),
      panels: byId("panels"),
      pinboard: byId("pinboard"),
      pinButton: byId<HTMLButtonElement>("pin-button"),
      staleBanner: byId("stale-banner"),
    },
    readStateFromLocation(),
  );
  void app.start();
  return app;
}
