/** Bundled starting points, numerically identical to the JSON configs
 * shipped with the CLI in demos/configs/.
 *
 * The four diameter study cases share a 20 mm pitch and walk the
 * camshaft/bearing tradeoff to the one combination that passes every
 * rule (case d, the sized linear-actuator design). The two 40 mm
 * presets isolate the camshaft-diameter effect on the pressure angle.
 */

import type { DesignConfig, MaterialFields, SynthesisRequestBody } from "./types.js";

export const STEEL: MaterialFields = {
  E_MPa: 210000.0,
  tau_c_max_MPa: 150.0,
  tau_b_max_MPa: 150.0,
  P_max_MPa: 800.0,
};

export interface Preset {
  label: string;
  config: DesignConfig;
}

function design(
  p_mm: number, eta: number, a4_mm: number, b_mm: number, width_a_mm: number,
): DesignConfig {
  return {
    design: { p_mm, eta, a4_mm, b_mm, n: 1, Mt_Nm: 1.2, width_a_mm },
    material: { ...STEEL },
  };
}

export const PRESETS: Record<string, Preset> = {
  case_a: {
    label: "case a: 2.5 / 5 mm shafts",
    config: design(20.0, 0.1875, 2.5, 1.25, 20.0),
  },
  case_b: {
    label: "case b: 0.5 / 8 mm shafts",
    config: design(20.0, 0.2125, 4.0, 0.25, 20.0),
  },
  case_c: {
    label: "case c: 2 / 8 mm shafts",
    config: design(20.0, 0.25, 4.0, 1.0, 20.0),
  },
  case_d: {
    label: "case d: 3.8 / 6.7 mm shafts (sized design)",
    config: design(20.0, 0.2625, 3.35, 1.9, 21.0),
  },
  wide_camshaft: {
    label: "40 mm pitch, fat 16 mm camshaft",
    config: design(40.0, 0.375, 7.0, 8.0, 20.0),
  },
  narrow_camshaft: {
    label: "40 mm pitch, thin 3 mm camshaft",
    config: design(40.0, 0.2125, 7.0, 1.5, 20.0),
  },
};

/** Initial dashboard state: the fully sized design. */
export const DEFAULT_PRESET = "case_d";

/** Load case for the synthesize panel. */
export const SYNTHESIS_REQUEST: SynthesisRequestBody = {
  Mt_Nm: 1.2,
  p0_mm: 20.0,
  material: { ...STEEL },
  mu_limit_deg: 30.0,
  max_cams: 4,
  max_pitch_steps: 4,
};
