import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { ApiClient } from "../src/api.js";
import { ExplorerApp, type AppElements } from "../src/app.js";
import { DEFAULT_STATE, type ExplorerState } from "../src/state.js";
import type { ExplainResponse } from "../src/types.js";

const HERE = dirname(fileURLToPath(import.meta.url));

/** Mount the real index.html body so tests exercise the shipped markup. */
export function mountAppDom(): void {
  const html = readFileSync(join(HERE, "..", "index.html"), "utf-8");
  const body = html.match(/<body>([\s\S]*)<\/body>/)![1];
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/, "");
}

export function appElements(): AppElements {
  const byId = <T extends HTMLElement>(id: string) =>
    document.getElementById(id) as T;
  return {
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
  };
}

export function makeApp(state?: Partial<ExplorerState>, baseUrl = ""): ExplorerApp {
  mountAppDom();
  return new ExplorerApp(new ApiClient(baseUrl), appElements(), {
    ...DEFAULT_STATE,
    pins: [],
    ...state,
  });
}

/** A sentinel payload; every number below is deliberately distinctive. */
export function sentinelPayload(): ExplainResponse {
  return {
    schema_version: 1,
    request: {
      scenario_id: "workplace",
      scenario: {
        question_text: "Do you feel adequately supported by your manager?",
        sensitive_answer_label: "NO",
        setting: "optional",
        adversary_label: "your manager",
        output_noun: "reports",
        others_sensitive_count: 0,
        consequence_text: "Your manager may retaliate.",
        action_share_label: "participate",
        action_withhold_label: "do not participate",
      },
      epsilon: 1.25,
      prior_no: 0.44,
      method: null,
      denominator: 100,
      n_samples: 2,
      seed: 987,
    },
    odds: {
      x: 23,
      y: 71,
      denominator: 100,
      p_without: 0.2299,
      p_with: 0.7099,
      threshold: 0.59901,
    },
    artifacts: {
      odds_text: {
        preamble: "Only ONE report will be randomly sent to your manager.",
        line_withhold:
          "If you do not participate, 23 out of 100 potential reports will lead your manager to believe you responded NO.",
        line_share:
          "If you participate, 71 out of 100 potential reports will lead your manager to believe you responded NO.",
      },
      icon_array_svg:
        '<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10"><circle cx="5" cy="5" r="4" fill="#4E79A7"/></svg>',
      sample_reports: {
        disclaimer:
          "The total number of NO responses may be fractional or negative due to the privacy method.",
        draws_withhold: [-1.44, 2.66],
        draws_share: [0.88, 3.11],
        display_withhold: ["-1.4", "2.7"],
        display_share: ["0.9", "3.1"],
        display_precision: 1,
        seed: 987,
      },
    },
  };
}

/** All numeric strings the sentinel payload legitimately puts on screen. */
export function sentinelNumbers(): Set<string> {
  const payload = sentinelPayload();
  const odds = payload.odds!;
  const samples = payload.artifacts.sample_reports!;
  return new Set(
    [
      odds.x,
      odds.y,
      odds.denominator,
      odds.threshold,
      payload.request.epsilon,
      payload.request.prior_no,
      payload.request.seed,
      ...samples.display_withhold,
      ...samples.display_share,
    ].map(String),
  );
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
