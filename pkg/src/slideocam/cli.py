"""Command-line front end.

Four subcommands: profile (geometry export), analyze (kinetostatic and
strength summary), synthesize (iterative sizing), serve (HTTP service).

Exit codes: 0 success, 1 I/O failure, 2 invalid config or design,
3 no feasible design within the requested search limits.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, analysis, config as config_mod
from .errors import Infeasible, SlideocamError
from .geometry import DesignParameters
from .strength import ReqVariant
from .svgout import render_svg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slideocam",
        description="Design toolkit for cam-roller prismatic transmissions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_prof = sub.add_parser("profile", help="export the cam profile and pitch curve")
    p_prof.add_argument("--config", required=True, help="design config JSON file")
    p_prof.add_argument("--out", help="output file (default: stdout)")
    p_prof.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    p_prof.add_argument("--samples", type=int, help="number of profile samples")
    p_prof.set_defaults(func=cmd_profile)

    p_an = sub.add_parser("analyze", help="kinetostatic and strength summary")
    p_an.add_argument("--config", required=True, help="design config JSON file")
    p_an.add_argument("--out", help="output file (default: stdout)")
    p_an.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p_an.add_argument(
        "--req-variant",
        choices=("paper", "local"),
        help="equivalent-radius rule for the headline Hertz pressure",
    )
    p_an.add_argument("--samples", type=int, help="number of sweep samples")
    p_an.set_defaults(func=cmd_analyze)

    p_syn = sub.add_parser("synthesize", help="size a transmission for a load case")
    p_syn.add_argument("--config", required=True, help="synthesis request JSON file")
    p_syn.add_argument("--out", help="output file (default: stdout)")
    p_syn.add_argument("--json", action="store_true", help="emit JSON instead of a report")
    p_syn.set_defaults(func=cmd_synthesize)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.set_defaults(func=cmd_serve)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_design(path: str):
    doc = config_mod.load_json_file(path)
    return config_mod.design_from_config(doc)


def _geometry_gate_failures(params: DesignParameters) -> list[str]:
    from .synthesis import check_constraints

    return check_constraints(params).failed_gates


def cmd_profile(args) -> int:
    params, options = _load_design(args.config)
    bad = _geometry_gate_failures(params)
    if bad:
        raise SlideocamError("invalid design, failed: " + ", ".join(bad))
    n = args.samples or options.n_samples
    if args.format == "svg":
        text = render_svg(params, n_samples=n)
    elif args.format == "json":
        text = json.dumps(analysis.profile_payload(params, n_samples=n), indent=2) + "\n"
    else:
        from .units import fmt9

        rows = analysis.profile_samples(params, n_samples=n)
        out = ["psi_rad,u_mm,v_mm,up_mm,vp_mm"]
        for row in rows:
            out.append(",".join(fmt9(x) for x in row))
        text = "\n".join(out) + "\n"
    _emit(text, args.out)
    return 0


def _analyze_table(doc: dict) -> str:
    s = doc["scalars"]
    c_rows = []
    for c in doc["constraints"]:
        margin = "-" if c["margin"] is None else format(c["margin"], "+.6f")
        status = "ok" if c["satisfied"] else "FAIL"
        c_rows.append(f"  {c['id']:<20} {status:<5} margin={margin}")
    hz_p, hz_l = doc["hertz"]["paper"], doc["hertz"]["local"]
    lines = [
        "profile",
        f"  delta_ext            {doc['delta_ext']:.6f} deg",
        f"  active interval      [{doc['interval']['start_deg']:.6f}, "
        f"{doc['interval']['end_deg']:.6f}] deg",
        "kinetostatics",
        f"  mu_max               {s['mu_max']:.6f} deg",
        f"  mu_min               {s['mu_min']:.6f} deg",
        f"  delta_mu             {s['delta_mu']:.6f} deg",
        f"  F_max                {s['F_max_N']:.6f} N",
        f"  F_axial              {s['F_axial_N']:.6f} N",
        f"  r_cam_min            {s['r_cam_min_mm']:.6f} mm",
        f"  P_peak [{doc['r_eq_variant']}]       {s['P_peak_MPa']:.6f} MPa",
        "shaft diameters (geometric)",
        f"  phi_cam              {s['phi_cam_mm']:.6f} mm",
        f"  phi_bear             {s['phi_bear_mm']:.6f} mm",
        "hertz pressure, constant equivalent radius",
        f"  P_peak               {hz_p['P_peak_MPa']:.6f} MPa",
        f"  P_low                {hz_p['P_low_MPa']:.6f} MPa",
        f"  r_eq                 {hz_p['r_eq_mm']:.6f} mm",
        "hertz pressure, local-curvature equivalent radius",
        f"  P_peak               {hz_l['P_peak_MPa']:.6f} MPa",
        f"  P_low                {hz_l['P_low_MPa']:.6f} MPa",
        f"  r_eq_min             {hz_l['r_eq_min_mm']:.6f} mm",
        "constraints",
        *c_rows,
    ]
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    params, options = _load_design(args.config)
    bad = _geometry_gate_failures(params)
    if bad:
        raise SlideocamError("invalid design, failed: " + ", ".join(bad))
    if args.req_variant:
        variant = (
            ReqVariant.LOCAL_CURVATURE
            if args.req_variant == "local"
            else ReqVariant.PAPER_CONSTANT
        )
        options = config_mod.AnalysisOptions(
            n_samples=options.n_samples, variant=variant, mu_limit=options.mu_limit
        )
    if args.samples:
        options = config_mod.AnalysisOptions(
            n_samples=args.samples, variant=options.variant, mu_limit=options.mu_limit
        )
    doc = analysis.analyze_payload(params, options)
    text = json.dumps(doc, indent=2) + "\n" if args.json else _analyze_table(doc)
    _emit(text, args.out)
    return 0


def _trace_lines(trace: list[dict]) -> list[str]:
    lines = ["  pitch_mm  n  phi_bear_min  phi_cam_min  mu_max      verdict"]
    for t in trace:
        mu = "-" if t["mu_max"] is None else f"{t['mu_max']:9.4f}"
        lines.append(
            f"  {t['pitch_mm']:8.3f}  {t['n_cams']}  {t['phi_bear_min_mm']:12.6f}"
            f"  {t['phi_cam_min_mm']:11.6f}  {mu:>9}  {t['verdict']}"
        )
    return lines


def _synthesize_report(doc: dict) -> str:
    d, s = doc["design"], doc["scalars"]
    lines = [
        "search trace",
        *_trace_lines(doc["trace"]),
        "accepted design",
        f"  p                    {d['p_mm']:.6f} mm",
        f"  eta                  {d['eta']:.6f}",
        f"  a4                   {d['a4_mm']:.6f} mm",
        f"  b                    {d['b_mm']:.6f} mm",
        f"  n                    {d['n']}",
        f"  width a              {d['width_a_mm']:.6f} mm",
        f"  phi_cam              {doc['diameters']['phi_cam_mm']:.6f} mm",
        f"  phi_bear             {doc['diameters']['phi_bear_mm']:.6f} mm",
        "performance",
        f"  mu_max               {s['mu_max']:.6f} deg",
        f"  delta_mu             {s['delta_mu']:.6f} deg",
        f"  F_max                {s['F_max_N']:.6f} N",
        f"  r_cam_min            {s['r_cam_min_mm']:.6f} mm",
        f"  P_peak               {s['P_peak_MPa']:.6f} MPa",
        "constraints",
    ]
    for c in doc["constraints"]:
        margin = "-" if c["margin"] is None else f"{c['margin']:+.6f}"
        lines.append(f"  {c['id']:<20} {'ok' if c['satisfied'] else 'FAIL':<5} margin={margin}")
    return "\n".join(lines) + "\n"


def cmd_synthesize(args) -> int:
    doc = config_mod.load_json_file(args.config)
    request = config_mod.request_from_config(doc)
    from .synthesis import synthesize

    try:
        outcome = synthesize(request)
    except Infeasible as exc:
        trace = analysis.trace_payload(exc.trace)
        if args.json:
            _emit(json.dumps({"error": "infeasible", "trace": trace}, indent=2) + "\n", args.out)
        else:
            sys.stderr.write("no feasible design within the search limits\n")
            sys.stderr.write("\n".join(_trace_lines(trace)) + "\n")
        return 3
    payload = analysis.synthesize_payload(outcome)
    text = json.dumps(payload, indent=2) + "\n" if args.json else _synthesize_report(payload)
    _emit(text, args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (SlideocamError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
