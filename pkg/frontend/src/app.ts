/** Single-page bootstrap: tab routing with all view state in the URL query. */

import { ApiClient, FetchLike } from "./api.js";
import { clear, el } from "./dom.js";
import { SelectionDraft } from "./selection.js";
import { decodeState, encodeState, TabName, ViewState } from "./state.js";
import { ApsTab, renderApsTab, TabContext } from "./tabs/aps.js";
import { renderCompareTab } from "./tabs/compare.js";
import { renderDatasetsTab } from "./tabs/datasets.js";

export interface AppOptions {
  fetchFn?: FetchLike;
  download?: (filename: string, content: string) => void;
}

export interface App {
  state: ViewState;
  activeTab: { pending: Promise<void>; dispose: () => void };
  switchTab: (tab: TabName) => void;
}

function browserDownload(filename: string, content: string): void {
  const blob = new Blob([content], { type: "text/csv" });
  const url = URL.createObjectURL(blob);
  const anchor = el("a", { href: url, download: filename });
  document.body.append(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}

const TAB_LABELS: Record<TabName, string> = {
  aps: "Performance Space",
  compare: "Algorithm Comparison",
  datasets: "Dataset Comparison",
};

export function boot(root: HTMLElement, options: AppOptions = {}): App {
  const client = new ApiClient(options.fetchFn);
  const selection = new SelectionDraft();
  const download = options.download ?? browserDownload;
  let state = decodeState(window.location.search);

  const errorHost = el("div", { class: "banners" });
  const nav = el("nav", { class: "tabs" });
  const main = el("main", { class: "tab-body" });
  clear(root);
  root.append(el("header", {}, [el("h1", {}, ["APS Explorer"]), nav]), errorHost, main);

  function pushUrl(replace: boolean): void {
    const query = encodeState(state);
    const url = query ? `?${query}` : window.location.pathname;
    if (replace) {
      window.history.replaceState(null, "", url);
    } else {
      window.history.pushState(null, "", url);
    }
  }

  const ctx: TabContext = {
    client,
    state,
    update(patch) {
      Object.assign(state, patch);
      pushUrl(true);
    },
    selection,
    errorHost,
    download,
  };

  function drawNav(): void {
    clear(nav);
    for (const tab of ["aps", "compare", "datasets"] as TabName[]) {
      nav.append(
        el("button", {
          class: state.tab === tab ? "tab active" : "tab",
          "data-tab": tab,
          onclick: () => app.switchTab(tab),
        }, [TAB_LABELS[tab]]),
      );
    }
  }

  function renderActive(): void {
    app.activeTab.dispose();
    clear(main);
    drawNav();
    if (state.tab === "compare") {
      app.activeTab = renderCompareTab(main, ctx);
    } else if (state.tab === "datasets") {
      app.activeTab = renderDatasetsTab(main, ctx);
    } else {
      app.activeTab = renderApsTab(main, ctx);
    }
  }

  const app: App = {
    state,
    activeTab: { pending: Promise.resolve(), dispose: () => undefined },
    switchTab(tab) {
      if (state.tab === tab) return;
      state.tab = tab;
      pushUrl(false);
      renderActive();
    },
  };

  window.addEventListener("popstate", () => {
    state = decodeState(window.location.search);
    ctx.state = state;
    app.state = state;
    renderActive();
  });

  renderActive();
  return app;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot(document.getElementById("app")!);
}
