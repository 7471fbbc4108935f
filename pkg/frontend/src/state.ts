/** View state and its URL-query encoding, so every view is shareable.
 *
 * Only non-default values appear in the query. `algorithms` / `datasets`
 * are the VISIBLE subsets; null means "all visible" and stays out of the
 * URL entirely.
 */

export type TabName = "aps" | "compare" | "datasets";

export interface ViewState {
  tab: TabName;
  metric: string;
  k: number;
  algorithms: string[] | null; // visible algorithm axes (null = all)
  datasets: string[] | null; // visible dataset points (null = all)
  compareA: string | null;
  compareB: string | null;
}

export const DEFAULT_STATE: ViewState = {
  tab: "aps",
  metric: "nDCG",
  k: 10,
  algorithms: null,
  datasets: null,
  compareA: null,
  compareB: null,
};

const TABS: TabName[] = ["aps", "compare", "datasets"];

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.tab !== DEFAULT_STATE.tab) params.set("tab", state.tab);
  if (state.metric !== DEFAULT_STATE.metric) params.set("metric", state.metric);
  if (state.k !== DEFAULT_STATE.k) params.set("k", String(state.k));
  if (state.algorithms) params.set("algorithms", state.algorithms.join(","));
  if (state.datasets) params.set("datasets", state.datasets.join(","));
  if (state.compareA) params.set("a", state.compareA);
  if (state.compareB) params.set("b", state.compareB);
  return params.toString();
}

export function decodeState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const tab = params.get("tab");
  const k = Number(params.get("k") ?? DEFAULT_STATE.k);
  const splitIds = (raw: string | null): string[] | null => {
    if (raw === null || raw === "") return null;
    const ids = raw.split(",").filter((s) => s.length > 0);
    return ids.length ? ids : null;
  };
  return {
    tab: TABS.includes(tab as TabName) ? (tab as TabName) : DEFAULT_STATE.tab,
    metric: params.get("metric") ?? DEFAULT_STATE.metric,
    k: Number.isInteger(k) && k >= 1 ? k : DEFAULT_STATE.k,
    algorithms: splitIds(params.get("algorithms")),
    datasets: splitIds(params.get("datasets")),
    compareA: params.get("a"),
    compareB: params.get("b"),
  };
}
