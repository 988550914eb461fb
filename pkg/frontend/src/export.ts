/** Config file export and import.
 *
 * The exported document is exactly what the CLI accepts, with numbers
 * serialized at full precision so evaluating the file reproduces the
 * dashboard scalars. */

import { fromConfig, toConfig, type DesignFormState } from "./state.js";
import type { DesignConfig } from "./types.js";

export function exportConfig(state: DesignFormState): string {
  return JSON.stringify(toConfig(state), null, 2) + "\n";
}

const DESIGN_KEYS = ["p_mm", "eta", "a4_mm", "b_mm", "n", "Mt_Nm", "width_a_mm"] as const;
const MATERIAL_KEYS = ["E_MPa", "tau_c_max_MPa", "tau_b_max_MPa", "P_max_MPa"] as const;

/** Parse a config document, checking structure rather than physics; the
 * geometry rules are the validator's and the server's business. */
export function parseConfig(text: string): DesignConfig {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    throw new Error(`not valid JSON: ${err instanceof Error ? err.message : String(err)}`);
  }
  if (typeof doc !== "object" || doc === null) {
    throw new Error("config must be a JSON object");
  }
  const record = doc as Record<string, unknown>;
  const design = requireSection(record, "design", DESIGN_KEYS);
  const material = requireSection(record, "material", MATERIAL_KEYS);
  const config: DesignConfig = {
    design: design as unknown as DesignConfig["design"],
    material: material as unknown as DesignConfig["material"],
  };
  if (record.analysis !== undefined) {
    if (typeof record.analysis !== "object" || record.analysis === null) {
      throw new Error("analysis section must be an object");
    }
    config.analysis = record.analysis as DesignConfig["analysis"];
  }
  return config;
}

function requireSection(
  doc: Record<string, unknown>, name: string, keys: readonly string[],
): Record<string, number> {
  const section = doc[name];
  if (typeof section !== "object" || section === null) {
    throw new Error(`missing ${name} section`);
  }
  const values = section as Record<string, unknown>;
  const out: Record<string, number> = {};
  for (const key of keys) {
    const value = values[key];
    if (typeof value !== "number" || !Number.isFinite(value)) {
      throw new Error(`${name}.${key} must be a finite number`);
    }
    out[key] = value;
  }
  return out;
}

/** Export followed by import; the identity the round-trip tests pin. */
export function roundTrip(state: DesignFormState): DesignFormState {
  return fromConfig(parseConfig(exportConfig(state)));
}

export function configFileName(presetName?: string): string {
  return presetName ? `slideocam-${presetName}.json` : "slideocam-design.json";
}
