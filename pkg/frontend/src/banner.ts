/** Non-blocking error banners carrying the API error code. */

import { ApiError } from "./api.js";
import { el } from "./dom.js";

export function showError(host: HTMLElement, error: unknown): void {
  const code = error instanceof ApiError ? error.code : "error";
  const message = error instanceof Error ? error.message : String(error);
  const banner = el("div", { class: "banner", role: "alert", "data-code": code }, [
    el("strong", {}, [code]),
    ` ${message} `,
    el("button", {
      class: "banner-dismiss",
      onclick: () => banner.remove(),
    }, ["dismiss"]),
  ]);
  host.append(banner);
}
