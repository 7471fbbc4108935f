/** Canned /api/v1 payloads behind a counting fetch, for UI contract tests. */

import type {
  AlgorithmInfo,
  ComparePayload,
  DatasetMeta,
  ProjectionPayload,
  QuadrantName,
  SelectionInfo,
} from "../src/types.js";

export const ALGORITHMS: AlgorithmInfo[] = ["X", "Y", "Z"].map((id) => ({
  id,
  n_datasets: 6,
  n_records: 30,
  specs: [
    { metric: "Recall", k: 10 },
    { metric: "nDCG", k: 5 },
    { metric: "nDCG", k: 10 },
  ],
}));

export const DATASETS: DatasetMeta[] = [
  ["ds01", 80, 50, 1200, 0.7, 0.16, 0.31, 0.09, 0.04],
  ["ds02", 60, 34, 590, 0.71, 0.17, 0.4, 0.5, 0.35],
  ["ds03", 45, 30, 790, 0.41, 0.15, 0.15, 0.0, 0.0],
  ["ds04", 120, 90, 2400, 0.78, 0.2, 0.45, 0.3, 0.2],
  ["ds05", 25, 18, 220, 0.51, 0.1, 0.2, 0.12, 0.06],
  ["ds06", 300, 150, 9000, 0.8, 0.3, 0.5, 0.4, 0.25],
].map(([name, nu, ni, nx, sp, gu, gi, ur, ir]) => ({
  name: name as string,
  n_users: nu as number,
  n_items: ni as number,
  n_interactions: nx as number,
  sparsity: sp as number,
  gini_user: gu as number,
  gini_item: gi as number,
  user_coldstart_risk: ur as number,
  item_coldstart_risk: ir as number,
  feedback: "Implicit",
}));

export function projectionPayload(algorithms: string[] | null): ProjectionPayload {
  const axes = algorithms ?? ["X", "Y", "Z"];
  const ids = DATASETS.map((d) => d.name);
  const base = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];
  return {
    metric: "nDCG",
    k: 10,
    dataset_ids: ids,
    algorithm_ids: axes,
    coords: base.map((v, i) => [v - 0.5, (i % 2 ? v : -v) / 2] as [number, number]),
    explained_variance_ratio: [0.7, 0.2],
    loadings: [axes.map((_, j) => (j === 0 ? 0.9 : 0.3)), axes.map((_, j) => (j === 1 ? 0.9 : -0.2))],
    column_means: axes.map(() => 0.45),
    mean_performance: base.map((v) => 1 - v),
    difficulty: ids.map((dataset, i) => ({
      dataset,
      score: base[i]!,
      level: ([1, 1, 2, 3, 4, 5] as const)[i]!,
    })),
  };
}

const COMPARE_IDS = Array.from({ length: 10 }, (_, i) => `ds${String(i + 1).padStart(2, "0")}`);
const COMPARE_X = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const COMPARE_Y = [0.05, 0.9, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1, 0.85];
const COMPARE_CLASS: QuadrantName[] = [
  "both_weak",
  "b_superior",
  "b_superior",
  "moderate",
  "moderate",
  "moderate",
  "moderate",
  "a_superior",
  "a_superior",
  "both_strong",
];

export function comparePayload(a: string, b: string): ComparePayload {
  const swapped = a === "Y" && b === "X";
  const flip: Record<QuadrantName, QuadrantName> = {
    a_superior: "b_superior",
    b_superior: "a_superior",
    both_weak: "both_weak",
    both_strong: "both_strong",
    moderate: "moderate",
  };
  return {
    metric: "nDCG",
    k: 10,
    algo_a: a,
    algo_b: b,
    thresholds: { low_a: 0.2, high_a: 0.7, low_b: 0.2, high_b: 0.7 },
    points: COMPARE_IDS.map((dataset, i) => ({
      dataset,
      x: swapped ? COMPARE_Y[i]! : COMPARE_X[i]!,
      y: swapped ? COMPARE_X[i]! : COMPARE_Y[i]!,
      class: swapped ? flip[COMPARE_CLASS[i]!] : COMPARE_CLASS[i]!,
    })),
    excluded: [],
  };
}

export function exportCsv(datasets: string[] | null): string {
  const header =
    "dataset,n_users,n_items,n_interactions,sparsity,gini_user,gini_item," +
    "user_coldstart_risk,item_coldstart_risk,feedback";
  const rows = DATASETS.filter((d) => !datasets || datasets.includes(d.name)).map(
    (d) =>
      `${d.name},${d.n_users},${d.n_items},${d.n_interactions},${d.sparsity.toFixed(6)},` +
      `${d.gini_user.toFixed(6)},${d.gini_item.toFixed(6)},${d.user_coldstart_risk.toFixed(6)},` +
      `${d.item_coldstart_risk.toFixed(6)},${d.feedback}`,
  );
  return [header, ...rows].join("\n") + "\n";
}

export interface MockApi {
  fetchFn: (url: string, init?: RequestInit) => Promise<Response>;
  calls: { url: string; method: string; body?: string }[];
  count: (pathPart: string) => number;
  lastExportBody: string | null;
  savedSelections: { name: string; dataset_ids: string[]; note: string | null }[];
}

export function makeMockApi(): MockApi {
  const api: MockApi = {
    calls: [],
    count: (part) => api.calls.filter((c) => c.url.includes(part)).length,
    lastExportBody: null,
    savedSelections: [],
    fetchFn: async (url, init) => {
      const method = init?.method ?? "GET";
      const body = typeof init?.body === "string" ? init.body : undefined;
      api.calls.push({ url, method, body });
      const parsed = new URL(url, "http://test.local");
      const path = parsed.pathname;
      const json = (payload: unknown, status = 200) =>
        new Response(JSON.stringify(payload), {
          status,
          headers: { "content-type": "application/json" },
        });

      if (path === "/api/v1/algorithms") return json(ALGORITHMS);
      if (path === "/api/v1/datasets") return json(DATASETS);
      if (path === "/api/v1/aps/projection") {
        const raw = parsed.searchParams.get("algorithms");
        return json(projectionPayload(raw ? raw.split(",") : null));
      }
      if (path === "/api/v1/compare") {
        return json(comparePayload(parsed.searchParams.get("a")!, parsed.searchParams.get("b")!));
      }
      if (path === "/api/v1/export/metadata.csv") {
        const raw = parsed.searchParams.get("datasets");
        const text = exportCsv(raw ? raw.split(",") : null);
        api.lastExportBody = text;
        return new Response(text, { status: 200, headers: { "content-type": "text/csv" } });
      }
      if (path === "/api/v1/selections" && method === "POST") {
        const parsedBody = JSON.parse(body ?? "{}");
        api.savedSelections.push({
          name: parsedBody.name,
          dataset_ids: parsedBody.dataset_ids,
          note: parsedBody.note ?? null,
        });
        const saved: SelectionInfo = {
          name: parsedBody.name,
          dataset_ids: parsedBody.dataset_ids,
          created_at: "2025-01-01T00:00:00Z",
          note: parsedBody.note ?? null,
        };
        return json(saved, 201);
      }
      if (path === "/api/v1/selections") return json([]);
      return json({ code: "not_found", message: `no mock for ${path}` }, 404);
    },
  };
  return api;
}
