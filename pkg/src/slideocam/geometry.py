"""Closed-form geometry of a Slide-o-Cam cam.

A Slide-o-Cam transmission turns camshaft rotation into follower
translation: rollers mounted on the follower ride on one or more
conjugate cams.  The displacement law is a constant lead, s(psi) =
(p/2pi) psi - p/2, so one camshaft turn advances the follower by the
pitch p.

Everything here is expressed in the cam-attached u-v frame.  The pitch
curve is the trajectory of the roller centre in that frame; the cam
profile is its inner offset by the roller radius a4.  The profile closes
over psi in [Delta, 2pi - Delta] where the extended angle Delta < 0 is
the orientation at which the profile's v coordinate vanishes.

Angles are raw radians throughout: psi is never wrapped into [0, 2pi),
callers control the range.  All lengths are metres.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import brentq

from .errors import DegenerateEta, NoRootFound

if TYPE_CHECKING:  # pragma: no cover - type-only import, avoids a cycle
    from .strength import Material

TWO_PI = 2.0 * math.pi

ALPHA1 = -math.pi / 2  # orientation of the follower translation axis, fixed

ETA_SINGULAR_TOL = 1e-9      # |eta - 1/(2pi)| below this is degenerate
ROOT_PROBES = 2048           # sign-scan resolution for the extended angle
ROOT_XTOL = 1e-13            # rad, bracketing solver tolerance
CLOSURE_TOL = 1e-9           # m, residual allowed at the profile endpoints


@dataclass(frozen=True)
class DesignParameters:
    """Complete parameter set of one Slide-o-Cam design.

    The constructor enforces positivity and finiteness only.  The design
    rules (eta > 1/(2pi), 2*a4 < p, a4/p <= eta - b/p) are evaluated by
    :func:`slideocam.synthesis.check_constraints`, which reports signed
    margins instead of raising, so invalid candidates can be inspected.
    """

    p: float              # pitch, m (roller spacing = follower travel per turn)
    eta: float            # e/p, dimensionless offset ratio
    a4: float             # roller outer radius, m
    b: float              # camshaft radius, m
    n: int = 1            # number of conjugate cams
    Mt: float = 0.0       # camshaft torque, N.m
    width_a: float = 0.020  # common width of cam and roller, m
    material: "Material | None" = None
    alpha1: float = ALPHA1  # rad; only -pi/2 is supported

    def __post_init__(self):
        for name in ("p", "eta", "a4", "b", "Mt", "width_a", "alpha1"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ValueError(f"{name} must be a finite number, got {v!r}")
        if self.p <= 0 or self.eta <= 0 or self.a4 <= 0 or self.width_a <= 0:
            raise ValueError("p, eta, a4 and width_a must be positive")
        if self.b < 0 or self.Mt < 0:
            raise ValueError("b and Mt must be non-negative")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if self.alpha1 != ALPHA1:
            raise ValueError("only alpha1 = -pi/2 is supported")

    @property
    def e(self) -> float:
        """Offset of the roller-centre line from the camshaft axis, m."""
        return self.eta * self.p


@dataclass(frozen=True)
class ProfilePoint:
    psi: float  # cam angle, rad
    u: float    # m
    v: float    # m


@dataclass(frozen=True)
class Coefficients:
    """Intermediate quantities of the contact-point expression."""

    b2: float     # m
    b3: float     # m
    delta: float  # rad, in (-pi/2, pi/2)


@dataclass(frozen=True)
class CamProfile:
    params: DesignParameters
    delta_ext: float                     # extended angle Delta, rad (<= 0)
    samples: list[ProfilePoint] = field(repr=False)
    closed: bool = True


def _offset_coefficient(params: DesignParameters) -> float:
    """2*pi*eta - 1, guarded against the singular design eta = 1/(2pi)."""
    c = TWO_PI * params.eta - 1.0
    if abs(params.eta - 1.0 / TWO_PI) < ETA_SINGULAR_TOL:
        raise DegenerateEta(
            f"eta = {params.eta} is within {ETA_SINGULAR_TOL} of 1/(2pi); "
            "the profile coefficients are singular there"
        )
    return c


def displacement(params: DesignParameters, psi: float) -> float:
    """Follower position s(psi) = (p/2pi) psi - p/2, in metres."""
    return (params.p / TWO_PI) * psi - params.p / 2.0


def displacement_derivatives(params: DesignParameters) -> tuple[float, float]:
    """(ds/dpsi, d2s/dpsi2) of the constant-lead law: (p/2pi, 0)."""
    return params.p / TWO_PI, 0.0


def coefficients(params: DesignParameters, psi: float) -> Coefficients:
    """Contact-point coefficients (b2, b3, delta) at cam angle psi.

    b2 = p/2pi, b3 = (p/2pi) sqrt((2pi eta - 1)^2 + (psi - pi)^2) and
    delta = arctan((psi - pi)/(2pi eta - 1)).  delta is the angle between
    the contact normal and the follower axis.

    Raises
    ------
    DegenerateEta
        If eta is within 1e-9 of 1/(2pi).
    """
    c = _offset_coefficient(params)
    t = psi - math.pi
    b2 = params.p / TWO_PI
    b3 = b2 * math.hypot(c, t)
    delta = math.atan(t / c)
    return Coefficients(b2=b2, b3=b3, delta=delta)


def contact_point(params: DesignParameters, psi: float) -> ProfilePoint:
    """Point of the cam profile (contact point C) at cam angle psi."""
    co = coefficients(params, psi)
    r = co.b3 - params.a4
    u = co.b2 * math.cos(psi) + r * math.cos(co.delta - psi)
    v = -co.b2 * math.sin(psi) + r * math.sin(co.delta - psi)
    return ProfilePoint(psi=psi, u=u, v=v)


def pitch_point(params: DesignParameters, psi: float) -> ProfilePoint:
    """Point of the pitch curve (roller centre trajectory) at cam angle psi."""
    s = displacement(params, psi)
    e = params.e
    u = e * math.cos(psi) + s * math.sin(psi)
    v = -e * math.sin(psi) + s * math.cos(psi)
    return ProfilePoint(psi=psi, u=u, v=v)


def _v_contact(params: DesignParameters, psi: float) -> float:
    return contact_point(params, psi).v


def extended_angle(params: DesignParameters) -> float:
    """The extended angle Delta: negative root of v_c(psi) = 0 nearest 0.

    Found by a uniform sign scan over [-pi, 0) followed by a bracketing
    root solve; the residual |v_c(Delta)| is guaranteed below 1e-12 m.

    Raises
    ------
    NoRootFound
        If v_c has no sign change on [-pi, 0); the profile cannot close.
    """
    probes = np.linspace(0.0, -math.pi, ROOT_PROBES)
    values = np.array([_v_contact(params, x) for x in probes])
    zero_hits = np.flatnonzero(values == 0.0)
    for i in zero_hits:
        if probes[i] < 0.0:
            return float(probes[i])
    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    if changes.size == 0:
        raise NoRootFound(
            "v_c has no sign change on [-pi, 0); no extended angle exists "
            f"for p={params.p}, eta={params.eta}, a4={params.a4}"
        )
    i = int(changes[0])  # first change scanning from 0 downwards
    root = brentq(lambda x: _v_contact(params, x),
                  probes[i], probes[i + 1], xtol=ROOT_XTOL)
    if abs(_v_contact(params, root)) >= 1e-12:
        raise NoRootFound("root solve did not converge below 1e-12 m")
    return float(root)


def generate_profile(params: DesignParameters, n_samples: int = 721) -> CamProfile:
    """Sample the closed cam profile on a uniform psi grid over
    [Delta, 2pi - Delta].

    Parameters
    ----------
    params : DesignParameters
    n_samples : int
        Grid size, at least 3.  The default of 721 resolves the profile
        to half a degree per step on a full turn.

    Returns
    -------
    CamProfile
        With ``closed`` set when the v residual at both endpoints is
        below 1e-9 m.
    """
    if n_samples < 3:
        raise ValueError("n_samples must be at least 3")
    delta_ext = extended_angle(params)
    grid = np.linspace(delta_ext, TWO_PI - delta_ext, n_samples)
    samples = [contact_point(params, float(x)) for x in grid]
    closed = abs(samples[0].v) < CLOSURE_TOL and abs(samples[-1].v) < CLOSURE_TOL
    return CamProfile(params=params, delta_ext=delta_ext,
                      samples=samples, closed=closed)


def generate_pitch_curve(params: DesignParameters,
                         n_samples: int = 721) -> list[ProfilePoint]:
    """Sample the pitch curve on the same grid generate_profile uses."""
    if n_samples < 3:
        raise ValueError("n_samples must be at least 3")
    delta_ext = extended_angle(params)
    grid = np.linspace(delta_ext, TWO_PI - delta_ext, n_samples)
    return [pitch_point(params, float(x)) for x in grid]
