/** Markup builders for the dashboard.
 *
 * Every function returns an HTML or SVG string; the controller assigns
 * them to container elements. Keeping this module DOM-free makes the
 * rendering testable without a browser. Geometry drawings use a
 * 1 unit = 1 mm coordinate system with the y axis flipped so positive
 * v points up, matching the CLI's SVG export. */

import type {
  ConstraintEntry,
  ErrorDetail,
  EvaluateResponse,
  EvaluateScalars,
  SynthesizeResponse,
  TraceEntry,
} from "./types.js";
import type { FieldIssue } from "./state.js";

const PAD_MM = 2.0;

/** Compact numeric display: seven significant digits, no exponent for
 * ordinary magnitudes. */
export function fmt(x: number): string {
  if (!Number.isFinite(x)) return String(x);
  return String(Number(x.toPrecision(7)));
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

// ---------------------------------------------------------------- profile

/** Index into the closed-span sample array for a given cam angle. */
export function pitchIndexFor(psiDeg: number, deltaExtDeg: number, count: number): number {
  const span = 360 - 2 * deltaExtDeg;
  const fraction = (psiDeg - deltaExtDeg) / span;
  const index = Math.round(fraction * (count - 1));
  return Math.min(Math.max(index, 0), count - 1);
}

export function renderProfileSvg(res: EvaluateResponse, a4mm: number): string {
  const rollerAngles = [0, 90, 180];
  const rollers = rollerAngles.map((deg) => {
    const i = pitchIndexFor(deg, res.delta_ext, res.pitch.length);
    return res.pitch[i];
  });

  let xMin = Infinity, xMax = -Infinity, yMin = Infinity, yMax = -Infinity;
  const consider = (x: number, y: number, r: number) => {
    xMin = Math.min(xMin, x - r);
    xMax = Math.max(xMax, x + r);
    yMin = Math.min(yMin, -y - r);
    yMax = Math.max(yMax, -y + r);
  };
  for (const [u, v] of res.profile) consider(u, v, 0);
  for (const [u, v] of res.pitch) consider(u, v, 0);
  for (const [u, v] of rollers) consider(u, v, a4mm);

  const x0 = xMin - PAD_MM;
  const y0 = yMin - PAD_MM;
  const width = xMax - xMin + 2 * PAD_MM;
  const height = yMax - yMin + 2 * PAD_MM;

  const path = (points: [number, number][], close: boolean): string => {
    const parts = points.map(([u, v], i) => `${i === 0 ? "M" : "L"} ${fmt(u)} ${fmt(-v)}`);
    if (close) parts.push("Z");
    return parts.join(" ");
  };

  const circles = rollers
    .map(([u, v]) => `<circle class="roller" cx="${fmt(u)}" cy="${fmt(-v)}" r="${fmt(a4mm)}"/>`)
    .join("");

  return [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="${fmt(x0)} ${fmt(y0)} ${fmt(width)} ${fmt(height)}" class="profile-drawing">`,
    `<path class="profile" d="${path(res.profile, true)}"/>`,
    `<path class="pitch" d="${path(res.pitch, false)}"/>`,
    circles,
    `</svg>`,
  ].join("");
}

// ----------------------------------------------------------------- sweeps

export interface SweepPlotOptions {
  title: string;
  unit: string;
  limit?: number;
  limitLabel?: string;
  width?: number;
  height?: number;
}

/** Line plot of a (psi, value) sweep over the active interval, with the
 * interval shaded and an optional horizontal limit line. */
export function renderSweepSvg(sweep: [number, number][], opts: SweepPlotOptions): string {
  const W = opts.width ?? 460;
  const H = opts.height ?? 220;
  const mL = 58, mR = 12, mT = 24, mB = 34;
  const plotW = W - mL - mR;
  const plotH = H - mT - mB;

  const xs = sweep.map(([psi]) => psi);
  const ys = sweep.map(([, y]) => y);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yTop = Math.max(...ys, opts.limit ?? -Infinity);
  if (!(yTop > 0)) yTop = 1;
  yTop *= 1.08;

  const X = (x: number) => mL + ((x - xMin) / (xMax - xMin || 1)) * plotW;
  const Y = (y: number) => mT + (1 - y / yTop) * plotH;

  const line = sweep
    .map(([x, y], i) => `${i === 0 ? "M" : "L"} ${fmt(X(x))} ${fmt(Y(y))}`)
    .join(" ");

  const pieces: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" class="sweep-plot">`,
    `<rect class="interval-band" x="${fmt(X(xMin))}" y="${mT}" width="${fmt(X(xMax) - X(xMin))}" height="${plotH}"/>`,
    `<text class="plot-title" x="${mL}" y="15">${esc(opts.title)}</text>`,
  ];
  if (opts.limit !== undefined && opts.limit <= yTop) {
    const y = fmt(Y(opts.limit));
    pieces.push(`<line class="limit-line" x1="${mL}" y1="${y}" x2="${W - mR}" y2="${y}"/>`);
    pieces.push(
      `<text class="limit-label" x="${W - mR}" y="${fmt(Y(opts.limit) - 4)}" text-anchor="end">` +
      `${esc(opts.limitLabel ?? `limit ${fmt(opts.limit)}`)}</text>`,
    );
  }
  pieces.push(`<path class="sweep" d="${line}"/>`);
  // axes: frame plus end labels, enough to read the ranges off the plot
  pieces.push(`<rect class="plot-frame" x="${mL}" y="${mT}" width="${plotW}" height="${plotH}"/>`);
  pieces.push(`<text class="tick" x="${mL}" y="${H - 12}">${fmt(xMin)}&#176;</text>`);
  pieces.push(`<text class="tick" x="${W - mR}" y="${H - 12}" text-anchor="end">${fmt(xMax)}&#176;</text>`);
  pieces.push(`<text class="tick" x="${mL - 6}" y="${mT + 10}" text-anchor="end">${fmt(yTop)}</text>`);
  pieces.push(`<text class="tick" x="${mL - 6}" y="${mT + plotH}" text-anchor="end">0</text>`);
  pieces.push(`<text class="tick unit" x="${mL - 6}" y="${mT + plotH / 2}" text-anchor="end">${esc(opts.unit)}</text>`);
  pieces.push(`</svg>`);
  return pieces.join("");
}

// ---------------------------------------------------------------- scalars

const SCALAR_CARDS: { key: keyof EvaluateScalars; label: string; unit: string }[] = [
  { key: "mu_max", label: "max pressure angle", unit: "deg" },
  { key: "delta_mu", label: "pressure-angle span", unit: "deg" },
  { key: "F_max_N", label: "peak contact force", unit: "N" },
  { key: "r_cam_min_mm", label: "min profile radius", unit: "mm" },
  { key: "P_peak_MPa", label: "peak Hertz pressure", unit: "MPa" },
  { key: "phi_cam_mm", label: "camshaft diameter", unit: "mm" },
  { key: "phi_bear_mm", label: "bearing diameter", unit: "mm" },
];

export function renderScalarCards(scalars: EvaluateScalars): string {
  const cards = SCALAR_CARDS.map(({ key, label, unit }) => {
    const value = scalars[key];
    return (
      `<div class="card" data-field="${key}">` +
      `<div class="card-label">${esc(label)}</div>` +
      `<div class="card-value">${fmt(value)}<span class="card-unit"> ${unit}</span></div>` +
      `</div>`
    );
  });
  return `<div class="cards">${cards.join("")}</div>`;
}

// ------------------------------------------------------------ constraints

export function renderConstraintTable(entries: ConstraintEntry[]): string {
  const rows = entries.map((entry) => {
    const cls = entry.satisfied ? "satisfied" : "violated";
    const margin = entry.margin === null ? "-" : (entry.margin >= 0 ? "+" : "") + fmt(entry.margin);
    const verdict = entry.satisfied ? "ok" : "violated";
    return (
      `<tr class="${cls}" data-constraint="${entry.id}">` +
      `<td>${entry.id}</td><td>${verdict}</td><td class="num">${margin}</td></tr>`
    );
  });
  return (
    `<table class="constraints"><thead><tr><th>rule</th><th>verdict</th><th>margin</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}

export function renderTraceTable(trace: TraceEntry[]): string {
  const rows = trace.map((t) => {
    const mu = t.mu_max === null ? "-" : fmt(t.mu_max);
    return (
      `<tr class="${t.verdict === "ok" ? "satisfied" : "violated"}">` +
      `<td class="num">${fmt(t.pitch_mm)}</td><td class="num">${t.n_cams}</td>` +
      `<td class="num">${mu}</td><td>${esc(t.verdict)}</td>` +
      `<td class="num">${fmt(t.phi_bear_min_mm)}</td><td class="num">${fmt(t.phi_cam_min_mm)}</td></tr>`
    );
  });
  return (
    `<table class="trace"><thead><tr><th>pitch mm</th><th>cams</th><th>mu_max deg</th>` +
    `<th>verdict</th><th>phi_bear_min mm</th><th>phi_cam_min mm</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}

// --------------------------------------------------------------- messages

export function renderIssues(issues: FieldIssue[]): string {
  if (issues.length === 0) return "";
  const items = issues.map(
    (issue) => `<li class="issue" data-rule="${issue.rule}">${esc(issue.message)}</li>`,
  );
  return `<ul class="issues">${items.join("")}</ul>`;
}

/** Structured error bodies rendered as actionable messages: a rejected
 * design shows which rules failed, an infeasible search shows what the
 * loop tried. */
export function renderErrorDetail(detail: ErrorDetail, status: number): string {
  const pieces = [
    `<div class="error-box" data-error="${esc(detail.error)}">`,
    `<p class="error-message">${esc(detail.message)} (HTTP ${status})</p>`,
  ];
  if (detail.constraints) {
    pieces.push(renderConstraintTable(detail.constraints));
  }
  if (detail.trace) {
    pieces.push(renderTraceTable(detail.trace));
  }
  pieces.push(`</div>`);
  return pieces.join("");
}

export function renderBanner(message: string, kind: "info" | "error"): string {
  return `<div class="banner ${kind}">${esc(message)}</div>`;
}

// -------------------------------------------------------------- synthesis

export function renderSynthesisResult(res: SynthesizeResponse): string {
  const d = res.design;
  const summary =
    `<p class="synth-summary">pitch ${fmt(d.p_mm)} mm, ${d.n} cam(s), eta ${fmt(d.eta)}, ` +
    `roller ${fmt(d.a4_mm)} mm, camshaft radius ${fmt(d.b_mm)} mm, width ${fmt(d.width_a_mm)} mm; ` +
    `shaft diameters ${fmt(res.diameters.phi_cam_mm)} / ${fmt(res.diameters.phi_bear_mm)} mm; ` +
    `mu_max ${fmt(res.scalars.mu_max)} deg, P_peak ${fmt(res.scalars.P_peak_MPa)} MPa</p>`;
  return summary + renderTraceTable(res.trace) + renderConstraintTable(res.constraints);
}
