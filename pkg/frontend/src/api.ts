/** Thin typed client for /api/v1. The fetch function is injectable so tests
 * can count calls and serve canned payloads. */

import type {
  AlgorithmInfo,
  ApiErrorBody,
  ComparePayload,
  DatasetMeta,
  ProjectionPayload,
  SelectionInfo,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

async function fail(response: Response): Promise<never> {
  let body: ApiErrorBody | null = null;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(body?.code ?? "http_error", body?.message ?? response.statusText, response.status);
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
    private readonly base: string = "",
  ) {}

  private async getJson<T>(path: string, params?: Record<string, string>): Promise<T> {
    const query = params && Object.keys(params).length ? `?${new URLSearchParams(params)}` : "";
    const response = await this.fetchFn(`${this.base}/api/v1${path}${query}`);
    if (!response.ok) await fail(response);
    return (await response.json()) as T;
  }

  datasets(): Promise<DatasetMeta[]> {
    return this.getJson("/datasets");
  }

  algorithms(): Promise<AlgorithmInfo[]> {
    return this.getJson("/algorithms");
  }

  projection(metric: string, k: number, algorithms?: string[]): Promise<ProjectionPayload> {
    const params: Record<string, string> = { metric, k: String(k) };
    if (algorithms) params.algorithms = algorithms.join(",");
    return this.getJson("/aps/projection", params);
  }

  compare(a: string, b: string, metric: string, k: number): Promise<ComparePayload> {
    return this.getJson("/compare", { a, b, metric, k: String(k) });
  }

  async exportMetadataCsv(datasets?: string[]): Promise<string> {
    const params = datasets && datasets.length ? `?${new URLSearchParams({ datasets: datasets.join(",") })}` : "";
    const response = await this.fetchFn(`${this.base}/api/v1/export/metadata.csv${params}`);
    if (!response.ok) await fail(response);
    return await response.text();
  }

  selections(): Promise<SelectionInfo[]> {
    return this.getJson("/selections");
  }

  async saveSelection(name: string, datasetIds: string[], note?: string, overwrite = false): Promise<SelectionInfo> {
    const response = await this.fetchFn(`${this.base}/api/v1/selections`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ name, dataset_ids: datasetIds, note: note ?? null, overwrite }),
    });
    if (!response.ok) await fail(response);
    return (await response.json()) as SelectionInfo;
  }

  async deleteSelection(name: string): Promise<void> {
    const response = await this.fetchFn(`${this.base}/api/v1/selections/${encodeURIComponent(name)}`, {
      method: "DELETE",
    });
    if (!response.ok) await fail(response);
  }
}
