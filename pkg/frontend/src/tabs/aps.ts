/** Projection tab: the dataset cloud in the reduced 2D space.
 *
 * Points are colored by difficulty level (1 lightest .. 5 darkest).
 * Toggling an algorithm changes the axes of the space, so it triggers
 * exactly one projection refetch; toggling a dataset only hides its point.
 * Clicking a point adds/removes the dataset in the shared selection draft.
 */

import { ApiClient } from "../api.js";
import { showError } from "../banner.js";
import { difficultyColor } from "../colors.js";
import { clear, el, svgEl } from "../dom.js";
import { LatestOnly } from "../request.js";
import { linearScale, makeCanvas, padDomain } from "../scatter.js";
import { SelectionDraft } from "../selection.js";
import type { ViewState } from "../state.js";
import type { AlgorithmInfo, ProjectionPayload } from "../types.js";

export interface TabContext {
  client: ApiClient;
  state: ViewState;
  update: (patch: Partial<ViewState>) => void;
  selection: SelectionDraft;
  errorHost: HTMLElement;
  download: (filename: string, content: string) => void;
}

export interface ApsTab {
  pending: Promise<void>;
  dispose: () => void;
}

const WIDTH = 560;
const HEIGHT = 420;
const PAD = 36;

export function renderApsTab(container: HTMLElement, ctx: TabContext): ApsTab {
  const guard = new LatestOnly();
  let payload: ProjectionPayload | null = null;
  let algorithmInfos: AlgorithmInfo[] = [];

  const metricSelect = el("select", { id: "aps-metric" });
  const kSelect = el("select", { id: "aps-k" });
  const algoBox = el("fieldset", { class: "algo-toggles" }, [el("legend", {}, ["algorithms (axes)"])]);
  const datasetBox = el("fieldset", { class: "dataset-toggles" }, [el("legend", {}, ["datasets (visibility)"])]);
  const info = el("p", { class: "aps-info" });
  const plotHost = el("div", { class: "aps-plot" });
  const chips = el("span", { class: "selection-chips" });
  const nameInput = el("input", { id: "selection-name", placeholder: "selection name" });
  const saveButton = el("button", { id: "save-selection" }, ["Save selection"]);
  const saveNote = el("span", { class: "save-note" });

  container.append(
    el("div", { class: "controls" }, [
      el("label", {}, ["metric ", metricSelect]),
      el("label", {}, ["K ", kSelect]),
    ]),
    algoBox,
    plotHost,
    info,
    datasetBox,
    el("div", { class: "selection-bar" }, [
      el("span", {}, ["selection: "]),
      chips,
      nameInput,
      saveButton,
      saveNote,
    ]),
  );

  function visibleDatasets(): Set<string> | null {
    return ctx.state.datasets ? new Set(ctx.state.datasets) : null;
  }

  function drawPoints(): void {
    clear(plotHost);
    if (!payload) return;
    const visible = visibleDatasets();
    const keep = payload.dataset_ids
      .map((id, i) => ({ id, i }))
      .filter(({ id }) => !visible || visible.has(id));
    const xs = keep.map(({ i }) => payload!.coords[i]![0]);
    const ys = keep.map(({ i }) => payload!.coords[i]![1]);
    const xScale = linearScale(padDomain(xs), [PAD, WIDTH - PAD]);
    const yScale = linearScale(padDomain(ys), [HEIGHT - PAD, PAD]);
    const canvas = makeCanvas(WIDTH, HEIGHT, "C1", "C2");
    const byId = new Map(payload.difficulty.map((d) => [d.dataset, d]));
    for (const { id, i } of keep) {
      const d = byId.get(id);
      const circle = svgEl("circle", {
        cx: xScale(payload.coords[i]![0]),
        cy: yScale(payload.coords[i]![1]),
        r: 7,
        fill: d ? difficultyColor(d.level) : "#999999",
        stroke: ctx.selection.has(id) ? "#111111" : "#ffffff",
        "stroke-width": ctx.selection.has(id) ? 2.5 : 1,
        class: "aps-point",
        "data-dataset": id,
        onclick: () => ctx.selection.toggle(id),
      });
      const hover = d
        ? `${id} — score ${d.score.toFixed(3)}, level ${d.level}`
        : `${id} — difficulty needs at least 5 datasets`;
      circle.append(svgEl("title", {}, [hover]));
      canvas.plot.append(circle);
    }
    plotHost.append(canvas.svg);
    const [v1, v2] = payload.explained_variance_ratio;
    info.textContent =
      `${payload.metric}@${payload.k}: C1 explains ${(v1 * 100).toFixed(1)}%, ` +
      `C2 ${(v2 * 100).toFixed(1)}% of score variance across ` +
      `${payload.algorithm_ids.length} algorithm axes`;
  }

  function renderDatasetToggles(): void {
    clear(datasetBox);
    datasetBox.append(el("legend", {}, ["datasets (visibility)"]));
    if (!payload) return;
    const visible = visibleDatasets();
    for (const id of payload.dataset_ids) {
      const checkbox = el("input", {
        type: "checkbox",
        class: "dataset-toggle",
        "data-dataset": id,
        onchange: () => {
          const boxes = datasetBox.querySelectorAll<HTMLInputElement>(".dataset-toggle");
          const checked = [...boxes].filter((b) => b.checked).map((b) => b.dataset.dataset!);
          ctx.update({ datasets: checked.length === boxes.length ? null : checked });
          drawPoints(); // hide/show only; the space is not recomputed
        },
      });
      checkbox.checked = !visible || visible.has(id);
      datasetBox.append(el("label", { class: "toggle" }, [checkbox, ` ${id}`]));
    }
  }

  function renderAlgorithmToggles(): void {
    clear(algoBox);
    algoBox.append(el("legend", {}, ["algorithms (axes)"]));
    const visible = ctx.state.algorithms ? new Set(ctx.state.algorithms) : null;
    for (const { id } of algorithmInfos) {
      const checkbox = el("input", {
        type: "checkbox",
        class: "algo-toggle",
        "data-algorithm": id,
        onchange: () => {
          const boxes = algoBox.querySelectorAll<HTMLInputElement>(".algo-toggle");
          const checked = [...boxes].filter((b) => b.checked).map((b) => b.dataset.algorithm!);
          ctx.update({ algorithms: checked.length === boxes.length ? null : checked });
          tab.pending = loadProjection(); // axes changed: one refetch
        },
      });
      checkbox.checked = !visible || visible.has(id);
      algoBox.append(el("label", { class: "toggle" }, [checkbox, ` ${id}`]));
    }
  }

  function renderSpecOptions(): void {
    const specs = new Map<string, Set<number>>();
    for (const a of algorithmInfos) {
      for (const s of a.specs) {
        if (!specs.has(s.metric)) specs.set(s.metric, new Set());
        specs.get(s.metric)!.add(s.k);
      }
    }
    const metrics = specs.size ? [...specs.keys()].sort() : ["HitRate", "Recall", "nDCG"];
    clear(metricSelect);
    for (const m of metrics) metricSelect.append(el("option", { value: m }, [m]));
    metricSelect.value = metrics.includes(ctx.state.metric) ? ctx.state.metric : metrics[0]!;
    const ks = specs.get(metricSelect.value);
    const kValues = ks && ks.size ? [...ks].sort((a, b) => a - b) : [ctx.state.k];
    clear(kSelect);
    for (const k of kValues) kSelect.append(el("option", { value: String(k) }, [String(k)]));
    kSelect.value = kValues.includes(ctx.state.k) ? String(ctx.state.k) : String(kValues[0]);
  }

  async function loadProjection(): Promise<void> {
    try {
      const result = await guard.run(() =>
        ctx.client.projection(ctx.state.metric, ctx.state.k, ctx.state.algorithms ?? undefined),
      );
      if (result === null) return; // superseded by a newer request
      payload = result;
      renderDatasetToggles();
      drawPoints();
    } catch (error) {
      showError(ctx.errorHost, error);
    }
  }

  async function loadAll(): Promise<void> {
    try {
      algorithmInfos = await ctx.client.algorithms();
      renderSpecOptions();
      renderAlgorithmToggles();
    } catch (error) {
      showError(ctx.errorHost, error);
    }
    await loadProjection();
  }

  metricSelect.addEventListener("change", () => {
    ctx.update({ metric: metricSelect.value });
    renderSpecOptions();
    ctx.update({ k: Number(kSelect.value) });
    tab.pending = loadProjection();
  });
  kSelect.addEventListener("change", () => {
    ctx.update({ k: Number(kSelect.value) });
    tab.pending = loadProjection();
  });
  saveButton.addEventListener("click", () => {
    const name = nameInput.value.trim();
    const ids = ctx.selection.list();
    if (!name || !ids.length) {
      saveNote.textContent = "pick a name and at least one dataset";
      return;
    }
    tab.pending = ctx.client
      .saveSelection(name, ids)
      .then((saved) => {
        saveNote.textContent = `saved ${saved.name} (${saved.dataset_ids.length})`;
      })
      .catch((error) => showError(ctx.errorHost, error));
  });

  const unsubscribe = ctx.selection.subscribe((ids) => {
    chips.textContent = ids.length ? ids.join(", ") : "(empty)";
    drawPoints();
  });

  const tab: ApsTab = { pending: loadAll(), dispose: unsubscribe };
  return tab;
}
