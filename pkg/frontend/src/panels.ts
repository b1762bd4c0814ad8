/**
 * Panel rendering. Every number shown here is copied verbatim out of an API
 * response (String() conversion only); this module performs no probability
 * arithmetic of its own.
 */

import type { ExplainResponse, ExtremePriorDetail } from "./types.js";

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function panel(title: string): HTMLElement {
  const node = el("section", "panel");
  node.appendChild(el("h3", "panel-title", title));
  return node;
}

export function renderReadouts(container: HTMLElement, payload: ExplainResponse): void {
  container.replaceChildren();
  const entries: [string, string][] = [
    ["epsilon", String(payload.request.epsilon)],
    ["prior P_no", String(payload.request.prior_no)],
    ["seed", String(payload.request.seed)],
  ];
  if (payload.odds !== null) {
    entries.push(
      ["threshold", String(payload.odds.threshold)],
      ["x (withhold)", `${payload.odds.x} / ${payload.odds.denominator}`],
      ["y (share)", `${payload.odds.y} / ${payload.odds.denominator}`],
    );
  }
  for (const [label, value] of entries) {
    const item = el("div", "readout");
    item.appendChild(el("span", "readout-label", label));
    item.appendChild(el("span", "readout-value", value));
    container.appendChild(item);
  }
}

export function renderPanels(container: HTMLElement, payload: ExplainResponse): void {
  container.replaceChildren();
  const { artifacts } = payload;

  if (artifacts.odds_text !== undefined) {
    const node = panel("Odds");
    node.appendChild(el("p", "preamble", artifacts.odds_text.preamble));
    node.appendChild(el("p", "odds-line odds-line-withhold", artifacts.odds_text.line_withhold));
    node.appendChild(el("p", "odds-line odds-line-share", artifacts.odds_text.line_share));
    container.appendChild(node);
  }

  if (artifacts.icon_array_svg !== undefined) {
    const node = panel("Icon array");
    const holder = el("div", "icon-array");
    holder.innerHTML = artifacts.icon_array_svg; // rendered from the returned SVG
    node.appendChild(holder);
    container.appendChild(node);
  }

  if (artifacts.sample_reports !== undefined) {
    const reports = artifacts.sample_reports;
    const scenario = payload.request.scenario;
    const node = panel("Sample reports");
    node.appendChild(el("p", "disclaimer", reports.disclaimer));
    const table = el("table", "samples");
    for (const [action, values] of [
      [scenario.action_withhold_label, reports.display_withhold],
      [scenario.action_share_label, reports.display_share],
    ] as [string, string[]][]) {
      const row = el("tr", "samples-row");
      row.appendChild(el("th", "samples-action", `If you ${action}`));
      for (const shown of values) {
        row.appendChild(el("td", "sample-value", shown));
      }
      table.appendChild(row);
    }
    node.appendChild(table);
    container.appendChild(node);
  }

  if (artifacts.control_text !== undefined) {
    const node = panel("Control explanation");
    for (const paragraph of artifacts.control_text.split("\n\n")) {
      node.appendChild(el("p", "control-paragraph", paragraph.trim()));
    }
    container.appendChild(node);
  }
}

/** Inline explanation shown instead of a raw 422. */
export function renderExtremePriorNotice(
  container: HTMLElement,
  detail: ExtremePriorDetail,
): void {
  container.replaceChildren();
  const node = el("section", "panel extreme-prior");
  node.appendChild(el("h3", "panel-title", "Prior too extreme for this budget"));
  node.appendChild(
    el(
      "p",
      "notice",
      "No possible output can change the adversary's conclusion: the prior's " +
        "odds already exceed e^epsilon, so the decision threshold does not exist. " +
        "Lower the prior's distance from 0.5 or raise epsilon.",
    ),
  );
  node.appendChild(el("p", "notice-detail", detail.message));
  container.appendChild(node);
}

export function setStaleBanner(banner: HTMLElement, stale: boolean, message = ""): void {
  banner.hidden = !stale;
  banner.textContent = stale
    ? `Showing stale data: ${message || "the API is unreachable"}`
    : "";
}
