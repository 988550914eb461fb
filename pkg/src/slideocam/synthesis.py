"""Constraint validation and the iterative sizing loop.

check_constraints turns a candidate design into a ledger of signed
margins, one entry per rule, never raising on violation; the CLI and
the HTTP service reject designs whose ledger does not pass.

synthesize runs the sizing loop from (torque, pitch) to a fully sized
design: per pitch it computes the smallest shaft diameters the material
allows, fixes the camshaft on that minimum, then searches the roller
radius downward from the largest that fits between neighbouring rollers
until the pressure-angle limit is met.  A bigger roller means a bigger
contact radius and lower Hertz pressure, so the search keeps the
largest radius the pressure angle permits.  Cam count and pitch grow
only when no roller radius works.  Discrete steps (0.05 mm roller,
0.1 mm camshaft, 0.5 mm width) land on preferred sizes and keep every
margin of the returned design strictly positive.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (DegenerateEta, Infeasible, NoRootFound,
                     SingularOrientation)
from .geometry import TWO_PI, DesignParameters, extended_angle
from .kinetostatics import (KinetostaticReport, active_interval,
                            kinetostatic_report, pressure_angle_extremes)
from .strength import (HertzReport, Material, ReqVariant, ShaftDiameters,
                       equivalent_radius, hertz_pressure, hertz_sweep,
                       min_bearing_shaft_diameter, min_camshaft_diameter,
                       min_width, shaft_diameters)

MU_LIMIT_DEFAULT = math.radians(30.0)

A4_STEP = 50e-6       # m, roller-radius search grid (0.05 mm)
PHI_CAM_STEP = 100e-6  # m, camshaft diameter rounding (0.1 mm)
WIDTH_STEP = 500e-6   # m, width rounding (0.5 mm)

CONSTRAINT_IDS = ("EtaLowerBound", "RollerSpacing", "ShaftClearance",
                  "PressureAngleLimit", "CamShear", "BearingShear",
                  "HertzLimit")

# Rules whose violation makes the cam geometry itself meaningless; a design
# failing one of these is rejected outright, while the remaining rules only
# flag the ledger so the numbers stay inspectable.
GEOMETRY_GATES = ("EtaLowerBound", "RollerSpacing", "ShaftClearance")


@dataclass(frozen=True)
class ConstraintCheck:
    id: str
    satisfied: bool
    margin: float | None   # None when the rule could not be evaluated


@dataclass(frozen=True)
class ConstraintReport:
    entries: list[ConstraintCheck]

    @property
    def passed(self) -> bool:
        return all(c.satisfied for c in self.entries)

    @property
    def failed_gates(self) -> list[str]:
        return [c.id for c in self.entries
                if c.id in GEOMETRY_GATES and not c.satisfied]

    def entry(self, id: str) -> ConstraintCheck:
        for c in self.entries:
            if c.id == id:
                return c
        raise KeyError(id)


@dataclass(frozen=True)
class SynthesisRequest:
    Mt: float                 # camshaft torque, N.m
    p0: float                 # base pitch increment, m
    material: Material
    mu_limit: float = MU_LIMIT_DEFAULT  # rad
    max_cams: int = 4
    max_pitch_steps: int = 4

    def __post_init__(self):
        if self.Mt <= 0 or self.p0 <= 0:
            raise ValueError("Mt and p0 must be positive")
        if not 0 < self.mu_limit < math.pi / 2:
            raise ValueError("mu_limit must lie in (0, 90 degrees)")
        if self.max_cams < 1 or self.max_pitch_steps < 1:
            raise ValueError("max_cams and max_pitch_steps must be >= 1")


@dataclass(frozen=True)
class TraceEntry:
    pitch: float              # m
    n_cams: int
    mu_max: float | None      # rad; best candidate seen, None if none valid
    verdict: str              # ok | pressure-angle-exceeded |
    #                           singular-orientation | no-valid-roller-radius
    phi_bear_min: float       # m, smallest bearing shaft at this pitch
    phi_cam_min: float        # m, smallest camshaft at this pitch


@dataclass(frozen=True)
class SynthesisOutcome:
    design: DesignParameters
    diameters: ShaftDiameters
    kinetostatics: KinetostaticReport
    hertz: HertzReport
    constraints: ConstraintReport
    trace: list[TraceEntry] = field(repr=False)


MARGIN_SNAP = 1e-12


def _snap(margin: float) -> float:
    """Collapse representation noise around a rule boundary.

    Decimal inputs that sit mathematically on a boundary (say
    eta p = a4 + b in millimetre literals) land within one ulp of zero
    after conversion; snapping gives them exact boundary semantics
    instead of a sign decided by rounding direction.
    """
    return 0.0 if abs(margin) < MARGIN_SNAP else margin


def check_constraints(params: DesignParameters,
                      mu_limit: float = MU_LIMIT_DEFAULT) -> ConstraintReport:
    """Evaluate every design rule with a signed margin; never raises on
    violation.

    Margins: EtaLowerBound is eta - 1/(2pi) (strict); RollerSpacing is
    (p - 2 a4)/p (strict); ShaftClearance is eta - b/p - a4/p (zero is
    allowed); the pressure-angle, shear and Hertz rules use the relative
    form 1 - demand/capacity (zero allowed).  Margins within 1e-12 of
    zero are reported as exactly zero.  A rule whose inputs cannot be
    computed (degenerate eta, unclosable profile, singular interval)
    reports satisfied=False with margin None.
    """
    if params.material is None:
        raise ValueError("params.material is required to check constraints")
    mat = params.material
    p, a4, b = params.p, params.a4, params.b
    entries: list[ConstraintCheck] = []

    m_eta = _snap(params.eta - 1.0 / TWO_PI)
    entries.append(ConstraintCheck("EtaLowerBound", m_eta > 0, m_eta))

    m_spacing = _snap((p - 2.0 * a4) / p)
    entries.append(ConstraintCheck("RollerSpacing", m_spacing > 0, m_spacing))

    m_clear = _snap(params.eta - b / p - a4 / p)
    entries.append(ConstraintCheck("ShaftClearance", m_clear >= 0, m_clear))

    mu_max = None
    try:
        delta_ext = extended_angle(params)
        interval = active_interval(params, delta_ext)
        mu_max, _ = pressure_angle_extremes(params, interval)
        m_mu = _snap(1.0 - mu_max / mu_limit)
        entries.append(ConstraintCheck("PressureAngleLimit", m_mu >= 0, m_mu))
    except (DegenerateEta, NoRootFound, SingularOrientation):
        entries.append(ConstraintCheck("PressureAngleLimit", False, None))

    phi_cam = 2.0 * (params.e - a4)
    if phi_cam > 0 and params.Mt > 0:
        demand = 8.0 * params.Mt * (2.0 / (math.pi * phi_cam ** 3)
                                    + 1.0 / (p * phi_cam ** 2))
        m_cam = _snap(1.0 - demand / mat.tau_c_max)
        entries.append(ConstraintCheck("CamShear", m_cam >= 0, m_cam))
    elif params.Mt == 0:
        entries.append(ConstraintCheck("CamShear", True, 1.0))
    else:
        entries.append(ConstraintCheck("CamShear", False, None))

    phi_bear = 2.0 * a4
    demand_b = 8.0 * params.Mt / (p * phi_bear ** 2)
    m_bear = _snap(1.0 - demand_b / mat.tau_b_max)
    entries.append(ConstraintCheck("BearingShear", m_bear >= 0, m_bear))

    if mu_max is not None and phi_cam > 0:
        F_max = (TWO_PI * params.Mt / p) / math.cos(mu_max)
        r_eq = equivalent_radius(phi_cam, phi_bear)
        P = hertz_pressure(F_max, mat.E, params.width_a, r_eq)
        m_hertz = _snap(1.0 - P / mat.P_max)
        entries.append(ConstraintCheck("HertzLimit", m_hertz >= 0, m_hertz))
    else:
        entries.append(ConstraintCheck("HertzLimit", False, None))

    return ConstraintReport(entries=entries)


def _ceil_strict(x: float, step: float) -> float:
    """Smallest integer multiple of step strictly greater than x."""
    k = math.floor(x / step + 1e-12) + 1
    return k * step


def synthesize(request: SynthesisRequest) -> SynthesisOutcome:
    """Run the sizing loop; returns a fully sized, all-margins-positive
    design or raises Infeasible carrying the iteration trace.

    Per (pitch, cam count) iteration: the smallest admissible shaft
    diameters are computed, the camshaft diameter is rounded up to the
    next 0.1 mm, and the roller radius is searched on a 0.05 mm grid
    from just under half the pitch downward; the first radius whose
    peak pressure angle meets the limit wins (it is the largest such
    radius, which maximises the contact radius).  The width is then
    sized from the peak force via the constant-variant equivalent
    radius and rounded up to the next 0.5 mm.

    The same request always returns the same outcome and trace.
    """
    trace: list[TraceEntry] = []
    mat = request.material
    for step_idx in range(1, request.max_pitch_steps + 1):
        p = request.p0 * step_idx
        phi_bear_min = min_bearing_shaft_diameter(request.Mt, p, mat.tau_b_max)
        phi_cam_min = min_camshaft_diameter(request.Mt, p, mat.tau_c_max)
        phi_cam_design = _ceil_strict(phi_cam_min, PHI_CAM_STEP)
        b = phi_cam_min / 2.0   # thinnest shaft that carries the torque
        k_lo = math.floor(phi_bear_min / 2.0 / A4_STEP + 1e-12) + 1
        k_hi = math.ceil(p / 2.0 / A4_STEP) - 1
        while k_hi * A4_STEP >= p / 2.0:
            k_hi -= 1
        for n in range(1, request.max_cams + 1):
            chosen = None
            best_mu = None
            saw_singular = False
            for k in range(k_hi, k_lo - 1, -1):
                a4 = k * A4_STEP
                eta = (a4 + phi_cam_design / 2.0) / p
                if eta <= 1.0 / TWO_PI + 1e-12:
                    break   # eta only shrinks as the roller shrinks
                cand = DesignParameters(p=p, eta=eta, a4=a4, b=b, n=n,
                                        Mt=request.Mt, width_a=0.02,
                                        material=mat)
                try:
                    delta_ext = extended_angle(cand)
                    interval = active_interval(cand, delta_ext)
                    mu_max, _ = pressure_angle_extremes(cand, interval)
                except SingularOrientation:
                    saw_singular = True
                    continue
                except (DegenerateEta, NoRootFound):
                    continue
                if best_mu is None or mu_max < best_mu:
                    best_mu = mu_max
                if mu_max <= request.mu_limit:
                    chosen = (a4, eta, mu_max)
                    break
            if chosen is not None:
                a4, eta, mu_max = chosen
                F_max = (TWO_PI * request.Mt / p) / math.cos(mu_max)
                r_eq = equivalent_radius(phi_cam_design, 2.0 * a4)
                width = _ceil_strict(
                    min_width(F_max, mat.E, r_eq, mat.P_max), WIDTH_STEP)
                design = DesignParameters(p=p, eta=eta, a4=a4, b=b, n=n,
                                          Mt=request.Mt, width_a=width,
                                          material=mat)
                trace.append(TraceEntry(pitch=p, n_cams=n, mu_max=mu_max,
                                        verdict="ok",
                                        phi_bear_min=phi_bear_min,
                                        phi_cam_min=phi_cam_min))
                kin = kinetostatic_report(design)
                hz = hertz_sweep(design, kin.interval,
                                 ReqVariant.PAPER_CONSTANT)
                report = check_constraints(design, request.mu_limit)
                return SynthesisOutcome(design=design,
                                        diameters=shaft_diameters(design),
                                        kinetostatics=kin, hertz=hz,
                                        constraints=report, trace=trace)
            if best_mu is not None:
                verdict = "pressure-angle-exceeded"
            elif saw_singular:
                verdict = "singular-orientation"
            else:
                verdict = "no-valid-roller-radius"
            trace.append(TraceEntry(pitch=p, n_cams=n, mu_max=best_mu,
                                    verdict=verdict,
                                    phi_bear_min=phi_bear_min,
                                    phi_cam_min=phi_cam_min))
    raise Infeasible(trace)
