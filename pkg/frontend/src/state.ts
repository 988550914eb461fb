/** Form state, client-side validation, and the mapping to the config
 * document the service and the CLI both accept.
 *
 * Validation here is a fast mirror of the server's geometry gates so a
 * hopeless design is highlighted before a round trip is spent on it;
 * the server stays the authority on everything else. */

import type { DesignConfig, DesignFields, MaterialFields, ReqVariant } from "./types.js";

export interface DesignFormState {
  p_mm: number;
  eta: number;
  a4_mm: number;
  b_mm: number;
  n: number;
  Mt_Nm: number;
  width_a_mm: number;
  E_MPa: number;
  tau_c_max_MPa: number;
  tau_b_max_MPa: number;
  P_max_MPa: number;
  // UI-only knobs
  r_eq_variant: ReqVariant;
  n_samples: number;
  mu_limit_deg: number;
}

export interface FieldIssue {
  field: keyof DesignFormState | "design";
  rule: string;
  message: string;
}

export const ETA_FLOOR = 1 / (2 * Math.PI);

const POSITIVE_FIELDS: (keyof DesignFormState)[] = [
  "p_mm", "eta", "a4_mm", "Mt_Nm", "width_a_mm",
  "E_MPa", "tau_c_max_MPa", "tau_b_max_MPa", "P_max_MPa",
];

export function validate(state: DesignFormState): FieldIssue[] {
  const issues: FieldIssue[] = [];
  for (const field of POSITIVE_FIELDS) {
    const value = state[field] as number;
    if (!Number.isFinite(value) || value <= 0) {
      issues.push({ field, rule: "Positive", message: `${field} must be a positive number` });
    }
  }
  if (!Number.isFinite(state.b_mm) || state.b_mm < 0) {
    issues.push({ field: "b_mm", rule: "Positive", message: "b_mm must be zero or positive" });
  }
  if (!Number.isInteger(state.n) || state.n < 1) {
    issues.push({ field: "n", rule: "CamCount", message: "n must be a whole number of cams, at least 1" });
  }
  if (Number.isFinite(state.eta) && state.eta > 0 && state.eta <= ETA_FLOOR) {
    issues.push({
      field: "eta",
      rule: "EtaLowerBound",
      message: `eta must exceed 1/(2pi) = ${ETA_FLOOR.toFixed(6)} or the profile turns back on itself`,
    });
  }
  if (state.p_mm > 0 && state.a4_mm > 0 && 2 * state.a4_mm >= state.p_mm) {
    issues.push({
      field: "a4_mm",
      rule: "RollerSpacing",
      message: "roller diameter 2 a4 must stay below the pitch p, neighbouring rollers collide otherwise",
    });
  }
  if (!Number.isInteger(state.n_samples) || state.n_samples < 3) {
    issues.push({ field: "n_samples", rule: "Samples", message: "sample count must be an integer of at least 3" });
  }
  if (!(state.mu_limit_deg > 0 && state.mu_limit_deg < 90)) {
    issues.push({ field: "mu_limit_deg", rule: "MuLimit", message: "pressure-angle limit must lie strictly between 0 and 90 degrees" });
  }
  return issues;
}

export function toConfig(state: DesignFormState): DesignConfig {
  return {
    design: {
      p_mm: state.p_mm,
      eta: state.eta,
      a4_mm: state.a4_mm,
      b_mm: state.b_mm,
      n: state.n,
      Mt_Nm: state.Mt_Nm,
      width_a_mm: state.width_a_mm,
    },
    material: {
      E_MPa: state.E_MPa,
      tau_c_max_MPa: state.tau_c_max_MPa,
      tau_b_max_MPa: state.tau_b_max_MPa,
      P_max_MPa: state.P_max_MPa,
    },
    analysis: {
      n_samples: state.n_samples,
      r_eq_variant: state.r_eq_variant,
      mu_limit_deg: state.mu_limit_deg,
    },
  };
}

export function fromConfig(doc: DesignConfig): DesignFormState {
  const d: DesignFields = doc.design;
  const m: MaterialFields = doc.material;
  return {
    p_mm: d.p_mm,
    eta: d.eta,
    a4_mm: d.a4_mm,
    b_mm: d.b_mm,
    n: d.n,
    Mt_Nm: d.Mt_Nm,
    width_a_mm: d.width_a_mm,
    E_MPa: m.E_MPa,
    tau_c_max_MPa: m.tau_c_max_MPa,
    tau_b_max_MPa: m.tau_b_max_MPa,
    P_max_MPa: m.P_max_MPa,
    r_eq_variant: doc.analysis?.r_eq_variant ?? "paper",
    n_samples: doc.analysis?.n_samples ?? 721,
    mu_limit_deg: doc.analysis?.mu_limit_deg ?? 30,
  };
}
