/**
 * Explorer state and its URL-fragment serialization.
 *
 * The whole state round-trips through location.hash so any what-if view is
 * a shareable link. Pins are stored as compact epsilon:x:y:denominator
 * quadruples.
 */

export const METHOD_TABS = [
  "all",
  "odds_text",
  "odds_vis",
  "sample_reports",
  "control_deterministic",
  "control_no_epsilon",
] as const;

export type MethodTab = (typeof METHOD_TABS)[number];

export interface PinnedSnapshot {
  epsilon: number;
  x: number;
  y: number;
  denominator: number;
}

export interface ExplorerState {
  epsilon: number; // [EPSILON_MIN, EPSILON_MAX], log-scale slider
  priorNo: number; // (0, 1)
  method: MethodTab;
  scenarioId: string;
  seed: number;
  pins: PinnedSnapshot[];
}

export const EPSILON_MIN = 0.01;
export const EPSILON_MAX = 20;

export const DEFAULT_STATE: ExplorerState = {
  epsilon: 0.5,
  priorNo: 0.5,
  method: "all",
  scenarioId: "workplace",
  seed: 20220131,
  pins: [],
};

/** Slider position in [0, 1] for an epsilon value (logarithmic mapping). */
export function epsilonToSlider(epsilon: number): number {
  const lo = Math.log(EPSILON_MIN);
  const hi = Math.log(EPSILON_MAX);
  return (Math.log(epsilon) - lo) / (hi - lo);
}

export function sliderToEpsilon(position: number): number {
  const lo = Math.log(EPSILON_MIN);
  const hi = Math.log(EPSILON_MAX);
  return Math.exp(lo + Math.min(Math.max(position, 0), 1) * (hi - lo));
}

function clampEpsilon(value: number): number {
  if (!Number.isFinite(value)) return DEFAULT_STATE.epsilon;
  return Math.min(Math.max(value, EPSILON_MIN), EPSILON_MAX);
}

function clampPrior(value: number): number {
  if (!Number.isFinite(value)) return DEFAULT_STATE.priorNo;
  return Math.min(Math.max(value, 0.01), 0.99);
}

export function encodeState(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("epsilon", String(state.epsilon));
  params.set("prior", String(state.priorNo));
  params.set("method", state.method);
  params.set("scenario", state.scenarioId);
  params.set("seed", String(state.seed));
  if (state.pins.length > 0) {
    params.set(
      "pins",
      state.pins
        .map((p) => [p.epsilon, p.x, p.y, p.denominator].join(":"))
        .join(","),
    );
  }
  return params.toString();
}

export function decodeState(fragment: string): ExplorerState {
  const params = new URLSearchParams(fragment.replace(/^#/, ""));
  const state: ExplorerState = { ...DEFAULT_STATE, pins: [] };
  const epsilon = params.get("epsilon");
  if (epsilon !== null) state.epsilon = clampEpsilon(Number(epsilon));
  const prior = params.get("prior");
  if (prior !== null) state.priorNo = clampPrior(Number(prior));
  const method = params.get("method");
  if (method !== null && (METHOD_TABS as readonly string[]).includes(method)) {
    state.method = method as MethodTab;
  }
  const scenario = params.get("scenario");
  if (scenario !== null && scenario !== "") state.scenarioId = scenario;
  const seed = params.get("seed");
  if (seed !== null && /^\d+$/.test(seed)) state.seed = Number(seed);
  const pins = params.get("pins");
  if (pins !== null && pins !== "") {
    for (const chunk of pins.split(",")) {
      const parts = chunk.split(":").map(Number);
      if (parts.length === 4 && parts.every((v) => Number.isFinite(v))) {
        state.pins.push({
          epsilon: parts[0],
          x: parts[1],
          y: parts[2],
          denominator: parts[3],
        });
      }
    }
  }
  return state;
}

export function readStateFromLocation(): ExplorerState {
  return decodeState(window.location.hash);
}

/** replaceState keeps back-button history clean while dragging sliders. */
export function writeStateToLocation(state: ExplorerState): void {
  history.replaceState(null, "", `#${encodeState(state)}`);
}
