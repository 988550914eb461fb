"""Profile synthesis: displacement law, coefficients, contact and pitch
points, the extension angle root, closure and symmetry."""

import math

import numpy as np
import pytest

from slideocam import (
    DegenerateEta,
    DesignParameters,
    NoRootFound,
    coefficients,
    contact_point,
    displacement,
    extended_angle,
    generate_pitch_curve,
    generate_profile,
    pitch_point,
)

from conftest import CASE_SHAFTS, study_case

TWO_PI = 2.0 * math.pi

# extension angles frozen from a high-precision root of v_c(psi) = 0
DELTA_EXT = {
    "a": -1.264191250495,
    "b": -1.188212128639,
    "c": -1.137101238303,
    "d": -1.139432489191,
}


def test_displacement_endpoints():
    d = study_case("d")
    assert displacement(d, 0.0) == pytest.approx(-d.p / 2, abs=1e-15)
    assert displacement(d, math.pi) == pytest.approx(0.0, abs=1e-15)
    assert displacement(d, TWO_PI) == pytest.approx(d.p / 2, abs=1e-15)


def test_displacement_is_linear_in_psi():
    d = study_case("a")
    psis = np.linspace(0.3, 5.1, 7)
    vals = [displacement(d, x) for x in psis]
    slopes = np.diff(vals) / np.diff(psis)
    assert slopes == pytest.approx([d.p / TWO_PI] * 6, rel=1e-12)


def test_coefficients_reference_point():
    # independent hand evaluation at p=20 mm, eta=0.1875, psi = pi - 4.4416
    d = DesignParameters(p=0.020, eta=0.1875, a4=0.0025, b=0.00125)
    co = coefficients(d, math.pi - 4.4416)
    assert co.b2 == pytest.approx(0.020 / TWO_PI, rel=1e-12)
    assert co.b3 == pytest.approx(14.149413e-3, abs=1e-8)
    assert co.delta == pytest.approx(-1.5307203, abs=1e-6)


def test_contact_point_at_pi_is_cam_radius():
    # at psi = pi the contact point sits on the negative u axis at
    # exactly e - a4 from the center, i.e. half the geometric camshaft
    # diameter
    d = study_case("a")
    pt = contact_point(d, math.pi)
    assert pt.u == pytest.approx(-(d.e - d.a4), rel=1e-12)
    assert pt.v == pytest.approx(0.0, abs=1e-15)


def test_pitch_point_matches_direct_trig():
    d = study_case("c")
    psi = 2.345
    s = (d.p / TWO_PI) * psi - d.p / 2
    pp = pitch_point(d, psi)
    assert pp.u == pytest.approx(d.e * math.cos(psi) + s * math.sin(psi), rel=1e-14)
    assert pp.v == pytest.approx(-d.e * math.sin(psi) + s * math.cos(psi), rel=1e-14)


@pytest.mark.parametrize("name", sorted(CASE_SHAFTS))
def test_extension_angle_frozen_values(name):
    d = study_case(name)
    assert extended_angle(d) == pytest.approx(DELTA_EXT[name], abs=1e-9)


def test_extension_angle_is_a_root_and_negative():
    d = study_case("b")
    delta = extended_angle(d)
    assert -math.pi < delta < 0.0
    assert abs(contact_point(d, delta).v) < 1e-12


def test_no_root_when_roller_swallows_the_cam():
    # a4 larger than the whole b3 - a4 geometry can support: v_c never
    # crosses zero on (-pi, 0)
    d = DesignParameters(p=0.020, eta=0.25, a4=0.012, b=0.001)
    with pytest.raises(NoRootFound):
        extended_angle(d)


def test_degenerate_eta_raises():
    d = DesignParameters(p=0.020, eta=1.0 / TWO_PI, a4=0.0025, b=0.001)
    with pytest.raises(DegenerateEta):
        coefficients(d, 1.0)
    with pytest.raises(DegenerateEta):
        extended_angle(d)


def test_profile_closure_and_sample_count():
    d = study_case("d")
    prof = generate_profile(d, n_samples=721)
    assert len(prof.samples) == 721
    assert prof.closed
    first, last = prof.samples[0], prof.samples[-1]
    assert abs(first.v) < 1e-9 and abs(last.v) < 1e-9
    assert first.u == pytest.approx(last.u, abs=1e-9)


def test_profile_mirror_symmetry():
    d = study_case("a")
    delta = extended_angle(d)
    for frac in (0.0, 0.17, 0.42, 0.5):
        psi = delta + frac * (TWO_PI - 2 * delta)
        lo = contact_point(d, psi)
        hi = contact_point(d, TWO_PI - psi)
        assert lo.u == pytest.approx(hi.u, abs=1e-12)
        assert lo.v == pytest.approx(-hi.v, abs=1e-12)


def test_offset_distance_equals_roller_radius():
    d = study_case("c")
    for psi in (0.9, 2.0, 3.7, 5.5):
        c = contact_point(d, psi)
        p = pitch_point(d, psi)
        dist = math.hypot(c.u - p.u, c.v - p.v)
        assert dist == pytest.approx(d.a4, abs=1e-12)


def test_pitch_curve_grid_matches_profile_grid():
    d = study_case("b")
    prof = generate_profile(d, n_samples=101)
    pc = generate_pitch_curve(d, n_samples=101)
    assert len(pc) == 101
    assert [pt.psi for pt in pc] == pytest.approx([pt.psi for pt in prof.samples])


@pytest.mark.parametrize(
    "kwargs",
    [
        {"p": -0.02, "eta": 0.25, "a4": 0.004, "b": 0.001},
        {"p": 0.02, "eta": 0.25, "a4": 0.0, "b": 0.001},
        {"p": 0.02, "eta": 0.25, "a4": 0.004, "b": 0.001, "n": 0},
        {"p": 0.02, "eta": 0.25, "a4": 0.004, "b": 0.001, "width_a": -1.0},
        {"p": float("nan"), "eta": 0.25, "a4": 0.004, "b": 0.001},
    ],
)
def test_parameter_validation(kwargs):
    with pytest.raises(ValueError):
        DesignParameters(**kwargs)


def test_offset_e_property():
    d = DesignParameters(p=0.040, eta=0.21, a4=0.007, b=0.0015)
    assert d.e == pytest.approx(0.0084, rel=1e-12)
