import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { QUADRANT_REGION_TINTS } from "../src/colors.js";
import { SelectionDraft } from "../src/selection.js";
import { DEFAULT_STATE, ViewState } from "../src/state.js";
import { TabContext } from "../src/tabs/aps.js";
import { renderCompareTab } from "../src/tabs/compare.js";
import { comparePayload, makeMockApi, MockApi } from "./mock_api.js";

let api: MockApi;
let container: HTMLElement;
let ctx: TabContext;
let state: ViewState;

beforeEach(() => {
  api = makeMockApi();
  container = document.createElement("div");
  document.body.append(container);
  state = { ...DEFAULT_STATE, tab: "compare", compareA: "X", compareB: "Y" };
  ctx = {
    client: new ApiClient(api.fetchFn),
    state,
    update: (patch) => Object.assign(state, patch),
    selection: new SelectionDraft(),
    errorHost: document.createElement("div"),
    download: () => undefined,
  };
});

function pointsByClass(cls: string): string[] {
  return [...container.querySelectorAll(`.compare-point[data-class="${cls}"]`)]
    .map((c) => c.getAttribute("data-dataset")!)
    .sort();
}

describe("comparison tab", () => {
  it("draws nine regions and threshold lines at the returned percentiles", async () => {
    const tab = renderCompareTab(container, ctx);
    await tab.pending;
    const regions = container.querySelectorAll(".region");
    expect(regions).toHaveLength(9);
    const tints = [...regions].map((r) => r.getAttribute("fill"));
    expect(tints.filter((t) => t === QUADRANT_REGION_TINTS.moderate)).toHaveLength(5);

    const { thresholds } = comparePayload("X", "Y");
    const lines = [...container.querySelectorAll(".threshold")];
    expect(lines).toHaveLength(4);
    const values = lines.map((l) => Number(l.getAttribute("data-value"))).sort();
    expect(values).toEqual(
      [thresholds.low_a, thresholds.low_b, thresholds.high_a, thresholds.high_b].sort(),
    );
    // boundary lines sit exactly where the regions change
    const xLine = lines.find((l) => l.getAttribute("data-axis") === "x")!;
    const redRect = container.querySelector('.region[data-region="both_weak"]')!;
    expect(Number(xLine.getAttribute("x1"))).toBeCloseTo(
      Number(redRect.getAttribute("x")) + Number(redRect.getAttribute("width")),
      6,
    );
  });

  it("classifies points into colored sets", async () => {
    const tab = renderCompareTab(container, ctx);
    await tab.pending;
    expect(pointsByClass("a_superior")).toEqual(["ds08", "ds09"]);
    expect(pointsByClass("b_superior")).toEqual(["ds02", "ds03"]);
    expect(pointsByClass("both_weak")).toEqual(["ds01"]);
    expect(pointsByClass("both_strong")).toEqual(["ds10"]);
    expect(pointsByClass("moderate")).toHaveLength(4);
  });

  it("moderate points land inside the white center region", async () => {
    const tab = renderCompareTab(container, ctx);
    await tab.pending;
    const moderate = container.querySelector('.compare-point[data-dataset="ds05"]')!;
    const cx = Number(moderate.getAttribute("cx"));
    const cy = Number(moderate.getAttribute("cy"));
    const center = [...container.querySelectorAll('.region[data-region="moderate"]')].find((r) => {
      const x = Number(r.getAttribute("x"));
      const y = Number(r.getAttribute("y"));
      const w = Number(r.getAttribute("width"));
      const h = Number(r.getAttribute("height"));
      return cx >= x && cx <= x + w && cy >= y && cy <= y + h;
    });
    expect(center).toBeDefined();
    expect(center!.getAttribute("fill")).toBe(QUADRANT_REGION_TINTS.moderate);
  });

  it("swapping A and B swaps the blue and yellow point sets", async () => {
    const tab = renderCompareTab(container, ctx);
    await tab.pending;
    const blueBefore = pointsByClass("a_superior");
    const yellowBefore = pointsByClass("b_superior");
    container.querySelector<HTMLButtonElement>("#cmp-swap")!.dispatchEvent(new Event("click"));
    await tab.pending;
    expect(state.compareA).toBe("Y");
    expect(state.compareB).toBe("X");
    expect(pointsByClass("a_superior")).toEqual(yellowBefore);
    expect(pointsByClass("b_superior")).toEqual(blueBefore);
    // red and green stay fixed
    expect(pointsByClass("both_weak")).toEqual(["ds01"]);
    expect(pointsByClass("both_strong")).toEqual(["ds10"]);
  });

  it("keeps the pair distinct when selects collide", async () => {
    const tab = renderCompareTab(container, ctx);
    await tab.pending;
    const selectA = container.querySelector<HTMLSelectElement>("#cmp-a")!;
    selectA.value = "Y"; // same as B
    selectA.dispatchEvent(new Event("change"));
    await tab.pending;
    expect(state.compareA).toBe("Y");
    expect(state.compareB).toBe("X"); // swapped, not duplicated
  });
});
