/** Thin typed client for the evaluation service.
 *
 * Every call resolves to a discriminated union instead of throwing, so
 * the dashboard can render the failure modes (bad design, infeasible
 * search, server unreachable) as ordinary states. The fetch function is
 * injectable for tests. */

import type {
  DesignConfig,
  ErrorDetail,
  EvaluateResponse,
  SynthesisRequestBody,
  SynthesizeResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export type ApiResult<T> =
  | { kind: "ok"; body: T }
  | { kind: "rejected"; status: number; detail: ErrorDetail }
  | { kind: "unreachable"; message: string };

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async health(): Promise<boolean> {
    try {
      const res = await this.fetchFn(`${this.baseUrl}/api/v1/health`);
      return res.ok;
    } catch {
      return false;
    }
  }

  evaluate(config: DesignConfig): Promise<ApiResult<EvaluateResponse>> {
    return this.post<EvaluateResponse>("/api/v1/evaluate", config);
  }

  synthesize(request: SynthesisRequestBody): Promise<ApiResult<SynthesizeResponse>> {
    return this.post<SynthesizeResponse>("/api/v1/synthesize", request);
  }

  private async post<T>(path: string, body: unknown): Promise<ApiResult<T>> {
    let res: Response;
    try {
      res = await this.fetchFn(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      return { kind: "unreachable", message: err instanceof Error ? err.message : String(err) };
    }
    let parsed: unknown;
    try {
      parsed = await res.json();
    } catch {
      return { kind: "unreachable", message: `response from ${path} was not JSON` };
    }
    if (res.ok) {
      return { kind: "ok", body: parsed as T };
    }
    const detail = (parsed as { detail?: ErrorDetail }).detail ?? {
      error: "unknown",
      message: `status ${res.status}`,
    };
    return { kind: "rejected", status: res.status, detail };
  }
}
