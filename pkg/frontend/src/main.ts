/** Dashboard controller: binds the form to the evaluation service.
 *
 * Pure view/controller; every number on screen comes from the service.
 * Edits are debounced and sequence-checked by DebouncedEvaluator, so
 * dragging a slider cannot flood the server or paint stale results. */

import { ApiClient, type ApiResult } from "./api.js";
import { DebouncedEvaluator } from "./debounce.js";
import { configFileName, exportConfig, parseConfig } from "./export.js";
import { DEFAULT_PRESET, PRESETS, SYNTHESIS_REQUEST } from "./presets.js";
import {
  fromConfig,
  toConfig,
  validate,
  type DesignFormState,
} from "./state.js";
import {
  renderBanner,
  renderConstraintTable,
  renderErrorDetail,
  renderIssues,
  renderProfileSvg,
  renderScalarCards,
  renderSweepSvg,
  renderSynthesisResult,
} from "./render.js";
import type { EvaluateResponse } from "./types.js";

const NUMERIC_FIELDS = [
  "p_mm", "eta", "a4_mm", "b_mm", "n", "Mt_Nm", "width_a_mm",
  "E_MPa", "tau_c_max_MPa", "tau_b_max_MPa", "P_max_MPa",
  "n_samples", "mu_limit_deg",
] as const;

type NumericField = (typeof NUMERIC_FIELDS)[number];

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function readState(): DesignFormState {
  const state = {} as DesignFormState;
  for (const field of NUMERIC_FIELDS) {
    state[field] = Number(el<HTMLInputElement>(field).value);
  }
  const variant = el<HTMLSelectElement>("r_eq_variant").value;
  state.r_eq_variant = variant === "local" ? "local" : "paper";
  return state;
}

function writeState(state: DesignFormState): void {
  for (const field of NUMERIC_FIELDS) {
    el<HTMLInputElement>(field).value = String(state[field]);
  }
  el<HTMLSelectElement>("r_eq_variant").value = state.r_eq_variant;
}

function showResult(state: DesignFormState, result: ApiResult<EvaluateResponse>): void {
  const cards = el("cards");
  const profileBox = el("profile-box");
  const muBox = el("mu-plot");
  const hertzBox = el("hertz-plot");
  const constraintsBox = el("constraints-box");
  const messages = el("messages");

  if (result.kind === "unreachable") {
    el("banner").innerHTML = renderBanner(
      `server unreachable: ${result.message}`, "error");
    return;
  }
  el("banner").innerHTML = "";
  if (result.kind === "rejected") {
    messages.innerHTML = renderErrorDetail(result.detail, result.status);
    cards.innerHTML = "";
    profileBox.innerHTML = "";
    muBox.innerHTML = "";
    hertzBox.innerHTML = "";
    constraintsBox.innerHTML = result.detail.constraints
      ? "" // already shown inside the error box
      : constraintsBox.innerHTML;
    return;
  }

  const res = result.body;
  messages.innerHTML = "";
  cards.innerHTML = renderScalarCards(res.scalars);
  profileBox.innerHTML = renderProfileSvg(res, state.a4_mm);
  muBox.innerHTML = renderSweepSvg(res.mu_sweep, {
    title: "pressure angle over the active interval",
    unit: "deg",
    limit: state.mu_limit_deg,
    limitLabel: `limit ${state.mu_limit_deg} deg`,
  });
  hertzBox.innerHTML = renderSweepSvg(res.hertz_sweep, {
    title: "Hertz pressure over the active interval",
    unit: "MPa",
    limit: state.P_max_MPa,
    limitLabel: `P_max ${state.P_max_MPa} MPa`,
  });
  constraintsBox.innerHTML = renderConstraintTable(res.constraints);
}

/** Service origin: same-origin by default, overridable for a two-port
 * dev setup with e.g. ``?api=http://localhost:8000``. */
function apiBaseFromLocation(): string {
  const api = new URLSearchParams(window.location.search).get("api");
  return api ? api.replace(/\/+$/, "") : "";
}

function main(): void {
  const client = new ApiClient(apiBaseFromLocation());
  let lastState = fromConfig(PRESETS[DEFAULT_PRESET].config);

  const evaluator = new DebouncedEvaluator<DesignFormState, void>(
    async (state) => {
      const result = await client.evaluate(toConfig(state));
      showResult(state, result);
    },
    () => undefined,
  );

  const onEdit = () => {
    lastState = readState();
    const issues = validate(lastState);
    el("issues").innerHTML = renderIssues(issues);
    if (issues.length === 0) {
      evaluator.schedule(lastState);
    }
  };

  // preset picker
  const presetSelect = el<HTMLSelectElement>("preset");
  for (const [name, preset] of Object.entries(PRESETS)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = preset.label;
    presetSelect.appendChild(option);
  }
  presetSelect.value = DEFAULT_PRESET;
  presetSelect.addEventListener("change", () => {
    const preset = PRESETS[presetSelect.value];
    if (preset) {
      writeState(fromConfig(preset.config));
      onEdit();
    }
  });

  for (const field of NUMERIC_FIELDS) {
    el<HTMLInputElement>(field).addEventListener("input", onEdit);
  }
  el<HTMLSelectElement>("r_eq_variant").addEventListener("change", onEdit);

  // config export and import
  el<HTMLButtonElement>("export-btn").addEventListener("click", () => {
    const blob = new Blob([exportConfig(readState())], { type: "application/json" });
    const anchor = document.createElement("a");
    anchor.href = URL.createObjectURL(blob);
    anchor.download = configFileName(presetSelect.value || undefined);
    anchor.click();
    URL.revokeObjectURL(anchor.href);
  });
  el<HTMLInputElement>("import-input").addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    try {
      const config = parseConfig(await file.text());
      writeState(fromConfig(config));
      onEdit();
    } catch (err) {
      el("issues").innerHTML = renderBanner(
        err instanceof Error ? err.message : String(err), "error");
    }
    input.value = "";
  });

  // synthesis panel: current torque, pitch, material and limit as the request
  el<HTMLButtonElement>("synthesize-btn").addEventListener("click", async () => {
    const state = readState();
    const request = {
      ...SYNTHESIS_REQUEST,
      Mt_Nm: state.Mt_Nm,
      p0_mm: state.p_mm,
      material: {
        E_MPa: state.E_MPa,
        tau_c_max_MPa: state.tau_c_max_MPa,
        tau_b_max_MPa: state.tau_b_max_MPa,
        P_max_MPa: state.P_max_MPa,
      },
      mu_limit_deg: state.mu_limit_deg,
    };
    const box = el("synthesis-box");
    box.innerHTML = renderBanner("searching...", "info");
    const result = await client.synthesize(request);
    if (result.kind === "ok") {
      box.innerHTML = renderSynthesisResult(result.body);
      // adopt the sized design so the dashboard shows it live
      writeState(fromConfig({ design: result.body.design, material: result.body.material }));
      onEdit();
    } else if (result.kind === "rejected") {
      box.innerHTML = renderErrorDetail(result.detail, result.status);
    } else {
      box.innerHTML = renderBanner(`server unreachable: ${result.message}`, "error");
    }
  });

  void client.health().then((up) => {
    if (!up) {
      el("banner").innerHTML = renderBanner(
        "evaluation server not reachable; start it with: slideocam serve", "error");
    }
  });

  writeState(lastState);
  onEdit();
}

document.addEventListener("DOMContentLoaded", main);
