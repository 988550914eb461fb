"""Pressure angle, active interval, transmitted force and curvature.

The pressure angle mu is the angle between the contact force and the
follower's translation direction; for the constant-lead law it reduces
to mu = arctan(|2 pi eta - 1| / |psi - pi|), the complement of the
coefficient angle delta.  Small mu means efficient force transmission,
and mu grows without bound as psi approaches pi, where the conjugate
cam must take over.

Curvature comes in three flavours: a closed form for the pitch curve,
the offset relation for the cam profile, and a finite-difference
evaluator for arbitrary sampled curves used to cross-check the closed
forms.  The sign convention is that of the sampled-curve formula
kappa = (v' u'' - u' v'') / (u'^2 + v'^2)^(3/2); with it the signed
radii of curvature satisfy rho_pitch = rho_cam + a4 identically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateCurve, SingularOrientation, Undercut
from .geometry import (TWO_PI, CamProfile, DesignParameters, ProfilePoint,
                       _offset_coefficient, coefficients, extended_angle)

PSI_SINGULAR_TOL = 1e-12   # rad, distance to psi = pi treated as singular
UNDERCUT_TOL = 1e-9        # |1 - a4 kappa_p| below this is a cusp
SPEED_SQ_TOL = 1e-18       # m^2, stationary-point threshold for sampled curves


@dataclass(frozen=True)
class ActiveInterval:
    """Cam-angle window over which one cam of an n-cam set drives its roller.

    [pi/n - Delta, 2pi/n - Delta]; length is pi/n.  Values may exceed
    2pi; the cam angle is periodic and is reduced only for display.
    """

    psi_start: float  # rad
    psi_end: float    # rad


@dataclass(frozen=True)
class KinetostaticReport:
    mu_max: float          # rad
    mu_min: float          # rad
    delta_mu: float        # rad
    interval: ActiveInterval
    force_max: float       # N
    kappa_p_sweep: list[tuple[float, float]] = field(repr=False)  # (psi, 1/m)
    kappa_c_sweep: list[tuple[float, float]] = field(repr=False)  # (psi, 1/m)
    r_cam_min: float = 0.0  # m, min of 1/|kappa_c| over the interval


def pressure_angle(params: DesignParameters, psi: float) -> float:
    """Pressure angle mu(psi) in radians, in [0, pi/2).

    Raises
    ------
    SingularOrientation
        At psi = pi, where mu reaches pi/2 and the conjugate cam
        carries the load.
    """
    t = psi - math.pi
    if abs(t) < PSI_SINGULAR_TOL:
        raise SingularOrientation("pressure angle is 90 degrees at psi = pi")
    c = abs(TWO_PI * params.eta - 1.0)
    return math.atan(c / abs(t))


def active_interval(params: DesignParameters, delta_ext: float) -> ActiveInterval:
    if delta_ext > 0:
        raise ValueError("delta_ext must be <= 0")
    n = params.n
    return ActiveInterval(psi_start=math.pi / n - delta_ext,
                          psi_end=TWO_PI / n - delta_ext)


def pressure_angle_extremes(params: DesignParameters,
                            interval: ActiveInterval) -> tuple[float, float]:
    """(mu_max, mu_min) over the active interval, in radians.

    mu decreases monotonically with distance from psi = pi, so the
    extremes sit at the interval endpoints: max at the endpoint nearest
    pi, min at the endpoint farthest from it.

    Raises
    ------
    SingularOrientation
        If pi lies strictly inside the interval (the cam would hand
        over mid-window; happens for n = 2 and 3 with typical Delta).
    """
    lo, hi = interval.psi_start, interval.psi_end
    if lo < math.pi < hi:
        raise SingularOrientation(
            f"psi = pi lies inside the active interval [{lo:.6f}, {hi:.6f}]"
        )
    c = abs(TWO_PI * params.eta - 1.0)
    d_near = min(abs(lo - math.pi), abs(hi - math.pi))
    d_far = max(abs(lo - math.pi), abs(hi - math.pi))
    mu_max = math.pi / 2 if d_near == 0 else math.atan(c / d_near)
    mu_min = math.atan(c / d_far)
    return mu_max, mu_min


def transmitted_force(params: DesignParameters, psi: float) -> float:
    """Axial force F(psi) = (2 pi Mt / p) / |sin delta(psi)|, in newtons.

    Raises
    ------
    SingularOrientation
        At psi = pi, where delta = 0 and the force is unbounded.
    """
    co = coefficients(params, psi)
    if abs(co.delta) < PSI_SINGULAR_TOL:
        raise SingularOrientation("transmitted force is unbounded at psi = pi")
    return (TWO_PI * params.Mt / params.p) / abs(math.sin(co.delta))


def axial_load(params: DesignParameters) -> float:
    """Net thrust delivered to the follower, 2 pi Mt / p, in newtons.

    Independent of the cam angle: the projection F(psi) |sin delta(psi)|
    cancels the orientation term, so torque and pitch fix the thrust.
    """
    return TWO_PI * params.Mt / params.p


def curvature_numeric(points: list[ProfilePoint]) -> list[tuple[float, float]]:
    """Curvature of a sampled curve via central differences.

    Evaluates kappa = (v' u'' - u' v'') / (u'^2 + v'^2)^(3/2) with
    second-order central differences on a uniform psi grid; only
    interior samples get a value (the two endpoints are dropped).

    Raises
    ------
    DegenerateCurve
        If the squared parametric speed drops below 1e-18 anywhere.
    """
    if len(points) < 5:
        raise ValueError("need at least 5 points")
    psi = np.array([pt.psi for pt in points])
    steps = np.diff(psi)
    h = steps[0]
    if h <= 0 or np.max(np.abs(steps - h)) > 1e-9 * abs(h):
        raise ValueError("samples must sit on a uniform, increasing psi grid")
    u = np.array([pt.u for pt in points])
    v = np.array([pt.v for pt in points])
    up = (u[2:] - u[:-2]) / (2 * h)
    vp = (v[2:] - v[:-2]) / (2 * h)
    upp = (u[2:] - 2 * u[1:-1] + u[:-2]) / h ** 2
    vpp = (v[2:] - 2 * v[1:-1] + v[:-2]) / h ** 2
    speed_sq = up ** 2 + vp ** 2
    if np.any(speed_sq < SPEED_SQ_TOL):
        raise DegenerateCurve("stationary point in sampled curve")
    kappa = (vp * upp - up * vpp) / speed_sq ** 1.5
    return list(zip(psi[1:-1].tolist(), kappa.tolist()))


def curvature_pitch(params: DesignParameters, psi: float) -> float:
    """Closed-form curvature of the pitch curve, 1/m."""
    c = _offset_coefficient(params)
    t = psi - math.pi
    num = t * t + 2.0 * c * (math.pi * params.eta - 1.0)
    den = (t * t + c * c) ** 1.5
    return (TWO_PI / params.p) * num / den


def curvature_profile(params: DesignParameters, psi: float) -> float:
    """Curvature of the cam profile via the offset relation
    kappa_c = kappa_p / (1 - a4 kappa_p), 1/m.

    Raises
    ------
    Undercut
        When 1 - a4 kappa_p vanishes: the roller radius equals the
        pitch radius of curvature and the profile has a cusp.
    """
    kp = curvature_pitch(params, psi)
    den = 1.0 - params.a4 * kp
    if abs(den) < UNDERCUT_TOL:
        raise Undercut(f"profile cusp at psi = {psi}: roller radius equals "
                       "the pitch radius of curvature")
    return kp / den


def cam_local_radius(params: DesignParameters, psi: float) -> float:
    """Local radius of curvature of the cam profile, 1/|kappa_c|, in m."""
    return 1.0 / abs(curvature_profile(params, psi))


def interval_grid(interval: ActiveInterval, n_samples: int = 721) -> np.ndarray:
    if n_samples < 3:
        raise ValueError("n_samples must be at least 3")
    return np.linspace(interval.psi_start, interval.psi_end, n_samples)


def kinetostatic_report(params: DesignParameters,
                        n_samples: int = 721) -> KinetostaticReport:
    """Full kinetostatic evaluation of a design over its active interval.

    Computes the extended angle, active interval, pressure-angle
    extremes, the peak transmitted force, curvature sweeps of pitch
    curve and cam profile, and the minimum local cam radius.
    """
    delta_ext = extended_angle(params)
    interval = active_interval(params, delta_ext)
    mu_max, mu_min = pressure_angle_extremes(params, interval)
    force_max = (TWO_PI * params.Mt / params.p) / math.cos(mu_max)
    grid = interval_grid(interval, n_samples)
    kp = [(float(x), curvature_pitch(params, float(x))) for x in grid]
    kc = [(float(x), curvature_profile(params, float(x))) for x in grid]
    r_cam_min = min(1.0 / abs(k) for _, k in kc)
    return KinetostaticReport(mu_max=mu_max, mu_min=mu_min,
                              delta_mu=mu_max - mu_min,
                              interval=interval, force_max=force_max,
                              kappa_p_sweep=kp, kappa_c_sweep=kc,
                              r_cam_min=r_cam_min)


def profile_curvature_check(profile: CamProfile) -> float:
    """Worst mismatch between sampled-curve curvature of the profile and
    the closed form, as sup|difference| / sup|closed form|.

    Diagnostic used by the test suite; exposed because it is handy when
    judging whether a sample count resolves a profile.
    """
    fd = curvature_numeric(profile.samples)
    closed = np.array([curvature_profile(profile.params, psi)
                       for psi, _ in fd])
    num = np.array([k for _, k in fd])
    scale = np.max(np.abs(closed))
    return float(np.max(np.abs(num - closed)) / scale)
