import { readFile } from "node:fs/promises";

import { describe, expect, it } from "vitest";

import { DEFAULT_PRESET, PRESETS, SYNTHESIS_REQUEST } from "../src/presets.js";
import { fromConfig, validate } from "../src/state.js";

async function loadSharedConfig(name: string): Promise<unknown> {
  const url = new URL(`../../demos/configs/${name}.json`, import.meta.url);
  return JSON.parse(await readFile(url, "utf8"));
}

describe("bundled presets", () => {
  it("all pass client-side validation", () => {
    for (const [name, preset] of Object.entries(PRESETS)) {
      expect(validate(fromConfig(preset.config)), name).toEqual([]);
    }
  });

  it("stay numerically identical to the CLI demo configs", async () => {
    for (const [name, preset] of Object.entries(PRESETS)) {
      const shared = (await loadSharedConfig(name)) as {
        design: Record<string, number>;
        material: Record<string, number>;
      };
      expect(preset.config.design, `${name}.design`).toEqual(shared.design);
      expect(preset.config.material, `${name}.material`).toEqual(shared.material);
    }
  });

  it("includes the four diameter study cases and both 40 mm cases", () => {
    expect(Object.keys(PRESETS)).toEqual([
      "case_a", "case_b", "case_c", "case_d", "wide_camshaft", "narrow_camshaft",
    ]);
    expect(DEFAULT_PRESET in PRESETS).toBe(true);
  });
});

describe("synthesis request preset", () => {
  it("matches the CLI synthesize example request", async () => {
    const shared = await loadSharedConfig("orthoglide_request");
    expect(SYNTHESIS_REQUEST).toEqual(shared);
  });
});
