import { describe, expect, it } from "vitest";

import { pinComparison, renderPinboard, snapshotFromPayload } from "../src/pinboard.js";
import { DEFAULT_STATE, type ExplorerState } from "../src/state.js";
import { mountAppDom, sentinelPayload } from "./helpers.js";

function freshState(): ExplorerState {
  return { ...DEFAULT_STATE, pins: [] };
}

describe("pin comparison", () => {
  it("appends a snapshot taken from the payload", () => {
    const state = freshState();
    expect(pinComparison(state, sentinelPayload())).toBe(true);
    expect(state.pins).toEqual([{ epsilon: 1.25, x: 23, y: 71, denominator: 100 }]);
  });

  it("pinning the same payload twice appends two identical rows", () => {
    const state = freshState();
    pinComparison(state, sentinelPayload());
    pinComparison(state, sentinelPayload());
    expect(state.pins).toHaveLength(2);
    expect(state.pins[0]).toEqual(state.pins[1]);
  });

  it("refuses to pin payloads without odds", () => {
    const payload = sentinelPayload();
    payload.odds = null;
    expect(snapshotFromPayload(payload)).toBeNull();
    const state = freshState();
    expect(pinComparison(state, payload)).toBe(false);
    expect(state.pins).toHaveLength(0);
  });
});

describe("pinboard rendering", () => {
  it("renders one row per pin plus a chart", () => {
    mountAppDom();
    const container = document.getElementById("pinboard")!;
    const pins = [
      { epsilon: 0.1, x: 48, y: 52, denominator: 100 },
      { epsilon: 0.5, x: 39, y: 61, denominator: 100 },
      { epsilon: 2, x: 18, y: 82, denominator: 100 },
    ];
    renderPinboard(container, pins);
    expect(container.querySelectorAll(".pin-row")).toHaveLength(3);
    expect(container.querySelector(".pin-chart svg")).not.toBeNull();
    expect(container.querySelectorAll(".pin-chart polyline")).toHaveLength(2);
    expect(container.textContent).toContain("48");
    expect(container.textContent).toContain("82");
  });

  it("shows an empty hint without pins", () => {
    mountAppDom();
    const container = document.getElementById("pinboard")!;
    renderPinboard(container, []);
    expect(container.textContent).toMatch(/Pin the current odds/);
  });
});
