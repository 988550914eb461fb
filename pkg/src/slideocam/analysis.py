"""Assembles analysis results into plain dicts for the CLI and the service.

Everything leaving this module is in boundary units (mm, degrees, MPa, N)
and rounded to nine significant digits, so the two front ends cannot drift
apart in formatting.
"""

from __future__ import annotations

from math import degrees

from . import config as config_mod
from .errors import SlideocamError
from .geometry import (
    DesignParameters,
    extended_angle,
    generate_pitch_curve,
    generate_profile,
    pitch_point,
)
from .kinetostatics import (
    active_interval,
    axial_load,
    interval_grid,
    kinetostatic_report,
    pressure_angle,
)
from .strength import ReqVariant, hertz_sweep, shaft_diameters
from .synthesis import SynthesisOutcome, check_constraints
from .units import MM, MPA, round9


class DesignRejected(SlideocamError):
    """A design broke one of the geometry gates, so no profile exists."""

    def __init__(self, report):
        super().__init__("design rejected: " + ", ".join(report.failed_gates))
        self.report = report


def constraints_payload(report) -> list[dict]:
    return [
        {"id": c.id, "satisfied": c.satisfied, "margin": round9(c.margin)}
        for c in report.entries
    ]


def evaluate_design(
    params: DesignParameters,
    options: config_mod.AnalysisOptions | None = None,
) -> dict:
    """Full evaluation of a geometrically sound design.

    Raises DesignRejected when a geometry gate fails (no profile exists
    then), or a geometry error (SingularOrientation and friends) if the
    sweeps cannot be produced.  Designs that merely break a strength or
    pressure-angle rule evaluate normally; their ledger entries carry
    satisfied=false so a caller can paint them red next to the curves.
    """
    if options is None:
        options = config_mod.AnalysisOptions()
    report = check_constraints(params, mu_limit=options.mu_limit)
    if report.failed_gates:
        raise DesignRejected(report)

    profile = generate_profile(params, n_samples=options.n_samples)
    pitch = generate_pitch_curve(params, n_samples=options.n_samples)
    interval = active_interval(params, profile.delta_ext)
    kin = kinetostatic_report(params, n_samples=options.n_samples)
    hz = hertz_sweep(params, interval, variant=options.variant, n_samples=options.n_samples)
    diam = shaft_diameters(params)

    mu_pairs = [
        [degrees(psi), degrees(pressure_angle(params, psi))]
        for psi in interval_grid(interval, n_samples=options.n_samples)
    ]
    payload = {
        "profile": [[pt.u / MM, pt.v / MM] for pt in profile.samples],
        "pitch": [[pt.u / MM, pt.v / MM] for pt in pitch],
        "delta_ext": degrees(profile.delta_ext),
        "interval": {
            "start_deg": degrees(interval.psi_start),
            "end_deg": degrees(interval.psi_end),
        },
        "mu_sweep": mu_pairs,
        "hertz_sweep": [[degrees(psi), p / MPA] for psi, p in hz.sweep],
        "constraints": constraints_payload(report),
        "scalars": {
            "mu_max": degrees(kin.mu_max),
            "delta_mu": degrees(kin.delta_mu),
            "F_max_N": kin.force_max,
            "r_cam_min_mm": kin.r_cam_min / MM,
            "P_peak_MPa": hz.P_peak / MPA,
            "phi_cam_mm": diam.phi_cam / MM,
            "phi_bear_mm": diam.phi_bear / MM,
        },
    }
    return round9(payload)


def analyze_payload(
    params: DesignParameters,
    options: config_mod.AnalysisOptions | None = None,
) -> dict:
    """Summary document for the analyze command: no point clouds, both
    equivalent-radius variants side by side."""
    if options is None:
        options = config_mod.AnalysisOptions()
    report = check_constraints(params, mu_limit=options.mu_limit)
    delta = extended_angle(params)
    interval = active_interval(params, delta)
    kin = kinetostatic_report(params, n_samples=options.n_samples)
    diam = shaft_diameters(params)
    hz_paper = hertz_sweep(
        params, interval, variant=ReqVariant.PAPER_CONSTANT, n_samples=options.n_samples
    )
    hz_local = hertz_sweep(
        params, interval, variant=ReqVariant.LOCAL_CURVATURE, n_samples=options.n_samples
    )
    hz_sel = hz_local if options.variant is ReqVariant.LOCAL_CURVATURE else hz_paper
    payload = {
        "r_eq_variant": options.variant.value,
        "delta_ext": degrees(delta),
        "interval": {
            "start_deg": degrees(interval.psi_start),
            "end_deg": degrees(interval.psi_end),
        },
        "scalars": {
            "mu_max": degrees(kin.mu_max),
            "mu_min": degrees(kin.mu_min),
            "delta_mu": degrees(kin.delta_mu),
            "F_max_N": kin.force_max,
            "F_axial_N": axial_load(params),
            "r_cam_min_mm": kin.r_cam_min / MM,
            "P_peak_MPa": hz_sel.P_peak / MPA,
            "phi_cam_mm": diam.phi_cam / MM,
            "phi_bear_mm": diam.phi_bear / MM,
        },
        "hertz": {
            "paper": {
                "P_peak_MPa": hz_paper.P_peak / MPA,
                "P_low_MPa": hz_paper.P_low / MPA,
                "r_eq_mm": hz_paper.r_eq_used / MM,
            },
            "local": {
                "P_peak_MPa": hz_local.P_peak / MPA,
                "P_low_MPa": hz_local.P_low / MPA,
                "r_eq_min_mm": hz_local.r_eq_used / MM,
            },
        },
        "constraints": constraints_payload(report),
    }
    return round9(payload)


def synthesize_payload(outcome: SynthesisOutcome) -> dict:
    """Serialize a synthesis outcome; matches the synthesize response schema."""
    doc = config_mod.config_from_design(outcome.design)
    payload = {
        "design": doc["design"],
        "material": doc["material"],
        "diameters": {
            "phi_cam_mm": outcome.diameters.phi_cam / MM,
            "phi_bear_mm": outcome.diameters.phi_bear / MM,
        },
        "scalars": {
            "mu_max": degrees(outcome.kinetostatics.mu_max),
            "delta_mu": degrees(outcome.kinetostatics.delta_mu),
            "F_max_N": outcome.kinetostatics.force_max,
            "r_cam_min_mm": outcome.kinetostatics.r_cam_min / MM,
            "P_peak_MPa": outcome.hertz.P_peak / MPA,
        },
        "constraints": constraints_payload(outcome.constraints),
        "trace": trace_payload(outcome.trace),
    }
    return round9(payload)


def trace_payload(trace) -> list[dict]:
    return round9(
        [
            {
                "pitch_mm": t.pitch / MM,
                "n_cams": t.n_cams,
                "mu_max": None if t.mu_max is None else degrees(t.mu_max),
                "verdict": t.verdict,
                "phi_bear_min_mm": t.phi_bear_min / MM,
                "phi_cam_min_mm": t.phi_cam_min / MM,
            }
            for t in trace
        ]
    )


def profile_samples(params: DesignParameters, n_samples: int = 721):
    """Rows of (psi_rad, u_mm, v_mm, up_mm, vp_mm) over the closed span."""
    profile = generate_profile(params, n_samples=n_samples)
    rows = []
    for pt in profile.samples:
        pp = pitch_point(params, pt.psi)
        rows.append((pt.psi, pt.u / MM, pt.v / MM, pp.u / MM, pp.v / MM))
    return rows


def profile_payload(params: DesignParameters, n_samples: int = 721) -> dict:
    """JSON form of the profile command output, with a config echo so the
    file can be fed back in as a design."""
    delta = extended_angle(params)
    doc: dict = {"delta_ext": round9(degrees(delta))}
    if params.material is not None:
        doc["config"] = round9(config_mod.config_from_design(params))
    doc["columns"] = ["psi_rad", "u_mm", "v_mm", "up_mm", "vp_mm"]
    doc["samples"] = round9([list(row) for row in profile_samples(params, n_samples)])
    return doc
