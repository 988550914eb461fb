"""Shaft sizing, equivalent contact radius, Hertz pressure, width sizing.

Two shafts carry the load: the camshaft (torsion plus bending between
its support bearings) and the bearing shafts the rollers spin on (pure
shear).  Their smallest admissible diameters follow from the allowable
stresses; the cam-roller line contact is then checked against the
allowable Hertz pressure, which also sizes the common width of cam and
roller.

The equivalent radius of the line contact exists in two variants.  The
constant variant combines the two shaft diameters once per design; the
local variant follows the actual contacting surfaces, combining the
roller radius with the cam profile's local radius of curvature at every
orientation.  Both are first-class citizens here: sweeps accept either.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from scipy.optimize import brentq

from .errors import SingularOrientation
from .geometry import TWO_PI, DesignParameters, coefficients
from .kinetostatics import ActiveInterval, cam_local_radius, interval_grid

HERTZ_COEF = 0.418  # line-contact pressure coefficient for steel-on-steel


class ReqVariant(Enum):
    """Which equivalent-radius convention a Hertz sweep uses."""

    PAPER_CONSTANT = "paper"    # from the two shaft diameters, once
    LOCAL_CURVATURE = "local"   # from roller radius + local cam curvature


@dataclass(frozen=True)
class Material:
    E: float           # Young modulus, Pa
    tau_c_max: float   # allowable camshaft stress, Pa
    tau_b_max: float   # allowable bearing-shaft stress, Pa
    P_max: float       # allowable Hertz pressure, Pa

    def __post_init__(self):
        for name in ("E", "tau_c_max", "tau_b_max", "P_max"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number")


@dataclass(frozen=True)
class ShaftDiameters:
    phi_cam: float    # camshaft diameter 2(e - a4), m
    phi_bear: float   # bearing-shaft diameter 2 a4, m

    def __post_init__(self):
        if self.phi_cam <= 0 or self.phi_bear <= 0:
            raise ValueError("shaft diameters must be positive")


@dataclass(frozen=True)
class HertzReport:
    sweep: list[tuple[float, float]] = field(repr=False)  # (psi, Pa)
    P_peak: float = 0.0    # Pa
    P_low: float = 0.0     # Pa
    r_eq_used: float = 0.0  # m; the constant, or the smallest local value
    variant: ReqVariant = ReqVariant.PAPER_CONSTANT


def shaft_diameters(params: DesignParameters) -> ShaftDiameters:
    """Geometric shaft diameters implied by (e, a4)."""
    return ShaftDiameters(phi_cam=2.0 * (params.e - params.a4),
                          phi_bear=2.0 * params.a4)


def min_bearing_shaft_diameter(Mt: float, p: float, tau_b_max: float) -> float:
    """Smallest bearing-shaft diameter: shear limit 8 Mt / (p phi^2)."""
    if Mt <= 0 or p <= 0 or tau_b_max <= 0:
        raise ValueError("Mt, p and tau_b_max must be positive")
    return math.sqrt(8.0 * Mt / (p * tau_b_max))


def min_camshaft_diameter(Mt: float, p: float, tau_c_max: float) -> float:
    """Smallest camshaft diameter under combined shear and bending.

    Solves 8 Mt (2/(pi phi^3) + 1/(p phi^2)) = tau_c_max for phi.  The
    left side is strictly decreasing in phi, so the root is unique; it
    is bracketed in [1e-6 m, 1 m] and solved to 1e-12 m.
    """
    if Mt <= 0 or p <= 0 or tau_c_max <= 0:
        raise ValueError("Mt, p and tau_c_max must be positive")

    def excess(phi: float) -> float:
        return 8.0 * Mt * (2.0 / (math.pi * phi ** 3) + 1.0 / (p * phi ** 2)) \
            - tau_c_max

    return float(brentq(excess, 1e-6, 1.0, xtol=1e-12))


def equivalent_radius(phi_cam: float, phi_bear: float) -> float:
    """Constant-variant equivalent radius 1/(2/phi_cam + 2/phi_bear), m."""
    if phi_cam <= 0 or phi_bear <= 0:
        raise ValueError("diameters must be positive")
    return 1.0 / (2.0 / phi_cam + 2.0 / phi_bear)


def equivalent_radius_local(r_cam: float, a4: float) -> float:
    """Local-variant equivalent radius 1/(1/r_cam + 1/a4), m."""
    if r_cam <= 0 or a4 <= 0:
        raise ValueError("radii must be positive")
    return 1.0 / (1.0 / r_cam + 1.0 / a4)


def hertz_pressure(F: float, E: float, a: float, r_eq: float) -> float:
    """Peak line-contact pressure 0.418 sqrt(F E / (a r_eq)), Pa."""
    if F < 0:
        raise ValueError("force must be non-negative")
    if E <= 0 or a <= 0 or r_eq <= 0:
        raise ValueError("E, a and r_eq must be positive")
    return HERTZ_COEF * math.sqrt(F * E / (a * r_eq))


def min_width(F_max: float, E: float, r_eq: float, P_max: float) -> float:
    """Smallest cam/roller width keeping the Hertz pressure at P_max.

    Exact inversion of hertz_pressure in the width argument:
    a = 0.418^2 F E / (r_eq P_max^2).
    """
    if F_max <= 0 or E <= 0 or r_eq <= 0 or P_max <= 0:
        raise ValueError("all arguments must be positive")
    return HERTZ_COEF ** 2 * F_max * E / (r_eq * P_max ** 2)


def hertz_sweep(params: DesignParameters, interval: ActiveInterval,
                variant: ReqVariant = ReqVariant.PAPER_CONSTANT,
                n_samples: int = 721) -> HertzReport:
    """Hertz pressure over the active interval (where the cam pushes).

    The constant variant evaluates the equivalent radius once from the
    shaft diameters; the local variant re-evaluates it at every sample
    from the cam profile's local radius of curvature.  ``r_eq_used``
    reports the constant, or the smallest local value encountered.

    Propagates SingularOrientation if a sample sits at psi = pi and
    Undercut if the profile has a cusp inside the interval.
    """
    if params.material is None:
        raise ValueError("params.material is required for a Hertz sweep")
    E = params.material.E
    a = params.width_a
    grid = interval_grid(interval, n_samples)
    base = TWO_PI * params.Mt / params.p
    sweep: list[tuple[float, float]] = []
    r_eq_used = math.inf
    if variant is ReqVariant.PAPER_CONSTANT:
        d = shaft_diameters(params)
        r_eq_used = equivalent_radius(d.phi_cam, d.phi_bear)
    for x in grid:
        psi = float(x)
        delta = coefficients(params, psi).delta
        if abs(delta) < 1e-12:
            raise SingularOrientation("active interval contains psi = pi")
        F = base / abs(math.sin(delta))
        if variant is ReqVariant.PAPER_CONSTANT:
            r_eq = r_eq_used
        else:
            r_eq = equivalent_radius_local(cam_local_radius(params, psi),
                                           params.a4)
            r_eq_used = min(r_eq_used, r_eq)
        sweep.append((psi, hertz_pressure(F, E, a, r_eq)))
    pressures = [P for _, P in sweep]
    return HertzReport(sweep=sweep, P_peak=max(pressures), P_low=min(pressures),
                       r_eq_used=r_eq_used, variant=variant)
