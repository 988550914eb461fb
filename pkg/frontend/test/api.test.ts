import { describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { PRESETS } from "../src/presets.js";
import type { ErrorDetail } from "../src/types.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

const OK_BODY = {
  profile: [[0, 0]],
  pitch: [[0, 0]],
  delta_ext: -65.28,
  interval: { start_deg: 245.28, end_deg: 425.28 },
  mu_sweep: [[245.28, 29.7]],
  hertz_sweep: [[245.28, 790.8]],
  constraints: [{ id: "EtaLowerBound", satisfied: true, margin: 0.1 }],
  scalars: {
    mu_max: 29.68, delta_mu: 21.05, F_max_N: 433.9,
    r_cam_min_mm: 3.31, P_peak_MPa: 790.8, phi_cam_mm: 3.8, phi_bear_mm: 6.7,
  },
};

describe("ApiClient.evaluate", () => {
  it("returns ok with the parsed body on 200", async () => {
    const fetchFn = vi.fn(async () => jsonResponse(OK_BODY));
    const client = new ApiClient("", fetchFn);
    const result = await client.evaluate(PRESETS.case_d.config);
    expect(result.kind).toBe("ok");
    if (result.kind === "ok") {
      expect(result.body.scalars.mu_max).toBeCloseTo(29.68, 6);
    }
    const [url, init] = fetchFn.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe("/api/v1/evaluate");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string).design.p_mm).toBe(20);
  });

  it("returns rejected with the error detail on 422", async () => {
    const detail: ErrorDetail = {
      error: "constraints-violated",
      message: "design rejected: RollerSpacing",
      constraints: [{ id: "RollerSpacing", satisfied: false, margin: -0.05 }],
    };
    const fetchFn = vi.fn(async () => jsonResponse({ detail }, 422));
    const client = new ApiClient("", fetchFn);
    const result = await client.evaluate(PRESETS.case_a.config);
    expect(result.kind).toBe("rejected");
    if (result.kind === "rejected") {
      expect(result.status).toBe(422);
      expect(result.detail.error).toBe("constraints-violated");
      expect(result.detail.constraints?.[0].id).toBe("RollerSpacing");
    }
  });

  it("returns unreachable when fetch itself fails", async () => {
    const fetchFn = vi.fn(async () => {
      throw new TypeError("fetch failed");
    });
    const client = new ApiClient("", fetchFn);
    const result = await client.evaluate(PRESETS.case_a.config);
    expect(result.kind).toBe("unreachable");
    if (result.kind === "unreachable") {
      expect(result.message).toContain("fetch failed");
    }
  });

  it("returns unreachable when the body is not JSON", async () => {
    const fetchFn = vi.fn(async () => new Response("<html>oops</html>", { status: 200 }));
    const client = new ApiClient("", fetchFn);
    const result = await client.evaluate(PRESETS.case_a.config);
    expect(result.kind).toBe("unreachable");
  });

  it("synthesizes a fallback detail when an error body has none", async () => {
    const fetchFn = vi.fn(async () => jsonResponse({}, 500));
    const client = new ApiClient("", fetchFn);
    const result = await client.evaluate(PRESETS.case_a.config);
    expect(result.kind).toBe("rejected");
    if (result.kind === "rejected") {
      expect(result.detail.message).toContain("500");
    }
  });
});

describe("ApiClient.health", () => {
  it("is true only when the service answers", async () => {
    const up = new ApiClient("", vi.fn(async () => jsonResponse({ status: "ok" })));
    expect(await up.health()).toBe(true);
    const down = new ApiClient("", vi.fn(async () => {
      throw new TypeError("refused");
    }));
    expect(await down.health()).toBe(false);
  });
});
