/**
 * Comparison pinboard: append-only snapshots of (epsilon, odds pair), drawn
 * as a small x/y-vs-epsilon chart plus a row list. Append semantics: pinning
 * the same state twice yields two identical rows.
 *
 * Chart geometry is computed here; the plotted values themselves come
 * verbatim from pinned API responses.
 */

import type { ExplainResponse } from "./types.js";
import type { ExplorerState, PinnedSnapshot } from "./state.js";

export function snapshotFromPayload(payload: ExplainResponse): PinnedSnapshot | null {
  if (payload.odds === null) return null;
  return {
    epsilon: payload.request.epsilon,
    x: payload.odds.x,
    y: payload.odds.y,
    denominator: payload.odds.denominator,
  };
}

export function pinComparison(state: ExplorerState, payload: ExplainResponse): boolean {
  const snapshot = snapshotFromPayload(payload);
  if (snapshot === null) return false;
  state.pins.push(snapshot);
  return true;
}

const WIDTH = 360;
const HEIGHT = 180;
const PAD = 28;

function chartSvg(pins: PinnedSnapshot[]): string {
  const sorted = [...pins].sort((a, b) => a.epsilon - b.epsilon);
  const logs = sorted.map((p) => Math.log(p.epsilon));
  const lo = Math.min(...logs);
  const hi = Math.max(...logs);
  const span = hi - lo || 1;
  const maxValue = Math.max(...sorted.map((p) => p.denominator));
  const px = (logEps: number) => PAD + ((logEps - lo) / span) * (WIDTH - 2 * PAD);
  const py = (v: number) => HEIGHT - PAD - (v / maxValue) * (HEIGHT - 2 * PAD);

  const line = (values: number[], color: string) => {
    const points = sorted
      .map((p, i) => `${px(logs[i]).toFixed(1)},${py(values[i]).toFixed(1)}`)
      .join(" ");
    const dots = sorted
      .map(
        (p, i) =>
          `<circle cx="${px(logs[i]).toFixed(1)}" cy="${py(values[i]).toFixed(1)}" r="3" fill="${color}"/>`,
      )
      .join("");
    return `<polyline points="${points}" fill="none" stroke="${color}" stroke-width="2"/>${dots}`;
  };

  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">` +
    `<line x1="${PAD}" y1="${HEIGHT - PAD}" x2="${WIDTH - PAD}" y2="${HEIGHT - PAD}" stroke="#888"/>` +
    `<line x1="${PAD}" y1="${PAD}" x2="${PAD}" y2="${HEIGHT - PAD}" stroke="#888"/>` +
    line(sorted.map((p) => p.x), "#BAB0AC") +
    line(sorted.map((p) => p.y), "#4E79A7") +
    `</svg>`
  );
}

export function renderPinboard(container: HTMLElement, pins: PinnedSnapshot[]): void {
  container.replaceChildren();
  const title = document.createElement("h3");
  title.className = "panel-title";
  title.textContent = `Pinboard (${pins.length})`;
  container.appendChild(title);
  if (pins.length === 0) {
    const empty = document.createElement("p");
    empty.className = "pinboard-empty";
    empty.textContent = "Pin the current odds to compare budgets.";
    container.appendChild(empty);
    return;
  }

  const chart = document.createElement("div");
  chart.className = "pin-chart";
  chart.innerHTML = chartSvg(pins);
  container.appendChild(chart);

  const list = document.createElement("table");
  list.className = "pin-rows";
  const head = document.createElement("tr");
  for (const label of ["epsilon", "x", "y"]) {
    const cell = document.createElement("th");
    cell.textContent = label;
    head.appendChild(cell);
  }
  list.appendChild(head);
  for (const pin of pins) {
    const row = document.createElement("tr");
    row.className = "pin-row";
    for (const value of [pin.epsilon, pin.x, pin.y]) {
      const cell = document.createElement("td");
      cell.textContent = String(value);
      row.appendChild(cell);
    }
    list.appendChild(row);
  }
  container.appendChild(list);
}
