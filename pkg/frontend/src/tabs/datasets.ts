/** Datasets tab: sortable, filterable metadata table with CSV export.
 *
 * The table performs no analytics: every cell comes straight from the
 * /datasets payload, and "Export CSV" downloads the API's CSV verbatim
 * (filtered to the visible rows when filters are active).
 */

import { showError } from "../banner.js";
import { clear, el } from "../dom.js";
import type { DatasetMeta } from "../types.js";
import type { TabContext } from "./aps.js";

export interface DatasetsTab {
  pending: Promise<void>;
  dispose: () => void;
}

const COLUMNS: { key: keyof DatasetMeta; label: string; numeric: boolean }[] = [
  { key: "name", label: "dataset", numeric: false },
  { key: "n_users", label: "users", numeric: true },
  { key: "n_items", label: "items", numeric: true },
  { key: "n_interactions", label: "interactions", numeric: true },
  { key: "sparsity", label: "sparsity", numeric: true },
  { key: "gini_user", label: "gini (user)", numeric: true },
  { key: "gini_item", label: "gini (item)", numeric: true },
  { key: "user_coldstart_risk", label: "cold-start (user)", numeric: true },
  { key: "item_coldstart_risk", label: "cold-start (item)", numeric: true },
  { key: "feedback", label: "feedback", numeric: false },
];

const RATIO_KEYS = new Set<keyof DatasetMeta>([
  "sparsity",
  "gini_user",
  "gini_item",
  "user_coldstart_risk",
  "item_coldstart_risk",
]);

export function formatCell(meta: DatasetMeta, key: keyof DatasetMeta): string {
  const value = meta[key];
  if (typeof value === "number" && RATIO_KEYS.has(key)) return value.toFixed(4);
  return String(value);
}

interface RangeFilter {
  key: keyof DatasetMeta;
  min: HTMLInputElement;
  max: HTMLInputElement;
}

export function renderDatasetsTab(container: HTMLElement, ctx: TabContext): DatasetsTab {
  let rows: DatasetMeta[] = [];
  let sortKey: keyof DatasetMeta = "name";
  let sortDir: 1 | -1 = 1;

  const nameFilter = el("input", { id: "ds-name-filter", placeholder: "filter by name" });
  const ranges: RangeFilter[] = (
    ["sparsity", "user_coldstart_risk", "item_coldstart_risk"] as (keyof DatasetMeta)[]
  ).map((key) => ({
    key,
    min: el("input", { type: "number", step: "0.01", class: `range-min`, "data-key": key, placeholder: "min" }),
    max: el("input", { type: "number", step: "0.01", class: `range-max`, "data-key": key, placeholder: "max" }),
  }));
  const exportButton = el("button", { id: "export-csv" }, ["Export CSV"]);
  const emptyNote = el("p", { class: "empty-note" });
  const table = el("table", { class: "datasets-table" });

  container.append(
    el("div", { class: "controls" }, [
      nameFilter,
      ...ranges.map((r) =>
        el("label", { class: "range" }, [`${String(r.key)} `, r.min, "–", r.max]),
      ),
      exportButton,
    ]),
    table,
    emptyNote,
  );

  function visibleRows(): DatasetMeta[] {
    const needle = nameFilter.value.trim().toLowerCase();
    let out = rows.filter((m) => !needle || m.name.toLowerCase().includes(needle));
    for (const r of ranges) {
      const lo = r.min.value === "" ? -Infinity : Number(r.min.value);
      const hi = r.max.value === "" ? Infinity : Number(r.max.value);
      out = out.filter((m) => {
        const v = m[r.key] as number;
        return v >= lo && v <= hi;
      });
    }
    const dir = sortDir;
    const key = sortKey;
    return [...out].sort((a, b) => {
      const va = a[key];
      const vb = b[key];
      if (typeof va === "number" && typeof vb === "number") return (va - vb) * dir;
      return String(va).localeCompare(String(vb)) * dir;
    });
  }

  function draw(): void {
    clear(table);
    const header = el("tr", {}, [el("th", {}, ["✓"])]);
    for (const col of COLUMNS) {
      const arrow = sortKey === col.key ? (sortDir === 1 ? " ↑" : " ↓") : "";
      header.append(
        el("th", {
          "data-key": col.key,
          onclick: () => {
            if (sortKey === col.key) {
              sortDir = sortDir === 1 ? -1 : 1;
            } else {
              sortKey = col.key;
              sortDir = 1;
            }
            draw();
          },
        }, [col.label + arrow]),
      );
    }
    table.append(el("thead", {}, [header]));
    const body = el("tbody", {});
    const visible = visibleRows();
    for (const meta of visible) {
      const checkbox = el("input", {
        type: "checkbox",
        class: "row-select",
        "data-dataset": meta.name,
        onchange: () => ctx.selection.toggle(meta.name),
      });
      checkbox.checked = ctx.selection.has(meta.name);
      const tr = el("tr", { "data-dataset": meta.name }, [
        el("td", {}, [checkbox]),
        ...COLUMNS.map((col) => el("td", { "data-key": col.key }, [formatCell(meta, col.key)])),
      ]);
      body.append(tr);
    }
    table.append(body);
    emptyNote.textContent = rows.length
      ? visible.length
        ? ""
        : "no datasets match the filters"
      : "no datasets ingested yet";
  }

  async function load(): Promise<void> {
    try {
      rows = await ctx.client.datasets();
      draw();
    } catch (error) {
      showError(ctx.errorHost, error);
    }
  }

  nameFilter.addEventListener("input", draw);
  for (const r of ranges) {
    r.min.addEventListener("input", draw);
    r.max.addEventListener("input", draw);
  }
  exportButton.addEventListener("click", () => {
    const visible = visibleRows().map((m) => m.name);
    const filterActive = visible.length !== rows.length;
    tab.pending = ctx.client
      .exportMetadataCsv(filterActive ? visible : undefined)
      .then((csv) => ctx.download("metadata.csv", csv))
      .catch((error) => showError(ctx.errorHost, error));
  });

  const unsubscribe = ctx.selection.subscribe(() => {
    for (const box of table.querySelectorAll<HTMLInputElement>(".row-select")) {
      box.checked = ctx.selection.has(box.dataset.dataset!);
    }
  });

  const tab: DatasetsTab = { pending: load(), dispose: unsubscribe };
  return tab;
}
