/** Wire formats of the /api/v1 evaluation service, in UI units
 * (millimetres, degrees, MPa, newton-metres). */

export interface DesignFields {
  p_mm: number;
  eta: number;
  a4_mm: number;
  b_mm: number;
  n: number;
  Mt_Nm: number;
  width_a_mm: number;
}

export interface MaterialFields {
  E_MPa: number;
  tau_c_max_MPa: number;
  tau_b_max_MPa: number;
  P_max_MPa: number;
}

export type ReqVariant = "paper" | "local";

export interface AnalysisFields {
  n_samples?: number;
  r_eq_variant?: ReqVariant;
  mu_limit_deg?: number;
}

export interface DesignConfig {
  design: DesignFields;
  material: MaterialFields;
  analysis?: AnalysisFields;
}

export interface SynthesisRequestBody {
  Mt_Nm: number;
  p0_mm: number;
  material: MaterialFields;
  mu_limit_deg?: number;
  max_cams?: number;
  max_pitch_steps?: number;
}

export interface ConstraintEntry {
  id: string;
  satisfied: boolean;
  margin: number | null;
}

export interface EvaluateScalars {
  mu_max: number;
  delta_mu: number;
  F_max_N: number;
  r_cam_min_mm: number;
  P_peak_MPa: number;
  phi_cam_mm: number;
  phi_bear_mm: number;
}

export interface EvaluateResponse {
  profile: [number, number][];
  pitch: [number, number][];
  delta_ext: number;
  interval: { start_deg: number; end_deg: number };
  mu_sweep: [number, number][];
  hertz_sweep: [number, number][];
  constraints: ConstraintEntry[];
  scalars: EvaluateScalars;
}

export interface TraceEntry {
  pitch_mm: number;
  n_cams: number;
  mu_max: number | null;
  verdict: string;
  phi_bear_min_mm: number;
  phi_cam_min_mm: number;
}

export interface SynthesizeResponse {
  design: DesignFields;
  material: MaterialFields;
  diameters: { phi_cam_mm: number; phi_bear_mm: number };
  scalars: {
    mu_max: number;
    delta_mu: number;
    F_max_N: number;
    r_cam_min_mm: number;
    P_peak_MPa: number;
  };
  constraints: ConstraintEntry[];
  trace: TraceEntry[];
}

/** Structured error body: every non-200 carries {detail: {...}}. */
export interface ErrorDetail {
  error: string;
  message: string;
  constraints?: ConstraintEntry[];
  trace?: TraceEntry[];
}
