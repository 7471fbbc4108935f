/** Comparison tab: two algorithms head to head, five tinted regions.
 *
 * x is algorithm A's score, y is algorithm B's.  Background rectangles are
 * derived from the four returned percentile thresholds: corners are tinted
 * red (both weak), green (both strong), blue (A superior) and yellow
 * (B superior); every middle-touching cell stays white.
 */

import { showError } from "../banner.js";
import { QUADRANT_POINT_COLORS, QUADRANT_REGION_TINTS } from "../colors.js";
import { clear, el, svgEl } from "../dom.js";
import { LatestOnly } from "../request.js";
import { linearScale, makeCanvas } from "../scatter.js";
import type { ComparePayload } from "../types.js";
import type { TabContext } from "./aps.js";

export interface CompareTab {
  pending: Promise<void>;
  dispose: () => void;
}

const WIDTH = 560;
const HEIGHT = 480;
const PAD = 40;

export function renderCompareTab(container: HTMLElement, ctx: TabContext): CompareTab {
  const guard = new LatestOnly();
  const selectA = el("select", { id: "cmp-a" });
  const selectB = el("select", { id: "cmp-b" });
  const swapButton = el("button", { id: "cmp-swap" }, ["swap A/B"]);
  const metricSelect = el("select", { id: "cmp-metric" });
  const kSelect = el("select", { id: "cmp-k" });
  const plotHost = el("div", { class: "compare-plot" });
  const note = el("p", { class: "compare-note" });

  container.append(
    el("div", { class: "controls" }, [
      el("label", {}, ["A (x) ", selectA]),
      el("label", {}, ["B (y) ", selectB]),
      swapButton,
      el("label", {}, ["metric ", metricSelect]),
      el("label", {}, ["K ", kSelect]),
    ]),
    plotHost,
    note,
  );

  function draw(payload: ComparePayload): void {
    clear(plotHost);
    const x = linearScale([0, 1], [PAD, WIDTH - PAD]);
    const y = linearScale([0, 1], [HEIGHT - PAD, PAD]);
    const canvas = makeCanvas(WIDTH, HEIGHT, `${payload.algo_a} score`, `${payload.algo_b} score`);
    const { low_a, high_a, low_b, high_b } = payload.thresholds;

    const xBands: [number, number][] = [[0, low_a], [low_a, high_a], [high_a, 1]];
    const yBands: [number, number][] = [[0, low_b], [low_b, high_b], [high_b, 1]];
    const cellClass = (col: number, row: number) => {
      if (col === 0 && row === 0) return "both_weak";
      if (col === 2 && row === 2) return "both_strong";
      if (col === 2 && row === 0) return "a_superior";
      if (col === 0 && row === 2) return "b_superior";
      return "moderate";
    };
    for (let col = 0; col < 3; col++) {
      for (let row = 0; row < 3; row++) {
        const [x0, x1] = xBands[col]!;
        const [y0, y1] = yBands[row]!;
        canvas.plot.append(
          svgEl("rect", {
            x: x(x0),
            y: y(y1),
            width: Math.max(x(x1) - x(x0), 0),
            height: Math.max(y(y0) - y(y1), 0),
            fill: QUADRANT_REGION_TINTS[cellClass(col, row)],
            class: "region",
            "data-region": cellClass(col, row),
          }),
        );
      }
    }
    for (const [axis, value] of [
      ["x", low_a],
      ["x", high_a],
      ["y", low_b],
      ["y", high_b],
    ] as const) {
      const attrs =
        axis === "x"
          ? { x1: x(value), x2: x(value), y1: y(0), y2: y(1) }
          : { x1: x(0), x2: x(1), y1: y(value), y2: y(value) };
      canvas.plot.append(
        svgEl("line", {
          ...attrs,
          class: "threshold",
          "data-axis": axis,
          "data-value": String(value),
          stroke: "#555555",
          "stroke-dasharray": "4 3",
        }),
      );
    }
    for (const point of payload.points) {
      const circle = svgEl("circle", {
        cx: x(point.x),
        cy: y(point.y),
        r: 6,
        fill: QUADRANT_POINT_COLORS[point.class],
        stroke: "#ffffff",
        class: "compare-point",
        "data-dataset": point.dataset,
        "data-class": point.class,
      });
      circle.append(svgEl("title", {}, [`${point.dataset} (${point.x.toFixed(4)}, ${point.y.toFixed(4)}) — ${point.class}`]));
      canvas.plot.append(circle);
    }
    plotHost.append(canvas.svg);
    note.textContent = payload.excluded.length
      ? `excluded (missing a score): ${payload.excluded.join(", ")}`
      : "";
  }

  async function refresh(): Promise<void> {
    const a = ctx.state.compareA;
    const b = ctx.state.compareB;
    if (!a || !b || a === b) {
      note.textContent = "pick two distinct algorithms";
      return;
    }
    try {
      const payload = await guard.run(() => ctx.client.compare(a, b, ctx.state.metric, ctx.state.k));
      if (payload === null) return;
      draw(payload);
    } catch (error) {
      showError(ctx.errorHost, error);
    }
  }

  function fillSelect(select: HTMLSelectElement, options: string[], value: string): void {
    clear(select);
    for (const o of options) select.append(el("option", { value: o }, [o]));
    select.value = value;
  }

  async function load(): Promise<void> {
    try {
      const infos = await ctx.client.algorithms();
      const ids = infos.map((i) => i.id);
      const a = ctx.state.compareA && ids.includes(ctx.state.compareA) ? ctx.state.compareA : ids[0] ?? "";
      let b = ctx.state.compareB && ids.includes(ctx.state.compareB) ? ctx.state.compareB : ids[1] ?? "";
      if (b === a) b = ids.find((i) => i !== a) ?? "";
      ctx.update({ compareA: a || null, compareB: b || null });
      fillSelect(selectA, ids, a);
      fillSelect(selectB, ids, b);

      const metrics = [...new Set(infos.flatMap((i) => i.specs.map((s) => s.metric)))].sort();
      const ks = [...new Set(infos.flatMap((i) => i.specs.map((s) => s.k)))].sort((p, q) => p - q);
      fillSelect(metricSelect, metrics.length ? metrics : [ctx.state.metric], ctx.state.metric);
      fillSelect(kSelect, (ks.length ? ks : [ctx.state.k]).map(String), String(ctx.state.k));
    } catch (error) {
      showError(ctx.errorHost, error);
    }
    await refresh();
  }

  selectA.addEventListener("change", () => {
    let b = ctx.state.compareB;
    if (selectA.value === b) {
      b = ctx.state.compareA; // keep the pair distinct by swapping
      selectB.value = b ?? "";
    }
    ctx.update({ compareA: selectA.value, compareB: b });
    tab.pending = refresh();
  });
  selectB.addEventListener("change", () => {
    let a = ctx.state.compareA;
    if (selectB.value === a) {
      a = ctx.state.compareB;
      selectA.value = a ?? "";
    }
    ctx.update({ compareA: a, compareB: selectB.value });
    tab.pending = refresh();
  });
  swapButton.addEventListener("click", () => {
    const { compareA, compareB } = ctx.state;
    ctx.update({ compareA: compareB, compareB: compareA });
    selectA.value = compareB ?? "";
    selectB.value = compareA ?? "";
    tab.pending = refresh();
  });
  metricSelect.addEventListener("change", () => {
    ctx.update({ metric: metricSelect.value });
    tab.pending = refresh();
  });
  kSelect.addEventListener("change", () => {
    ctx.update({ k: Number(kSelect.value) });
    tab.pending = refresh();
  });

  const tab: CompareTab = { pending: load(), dispose: () => undefined };
  return tab;
}
