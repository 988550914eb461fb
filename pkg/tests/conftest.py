"""Shared fixtures: the four published single-cam study designs.

Each case is named by its shaft-diameter pair (phi_cam, phi_bear) in mm;
roller radius and offset ratio follow from p = 20 mm via
a4 = phi_bear/2 and eta = (a4 + phi_cam/2)/p.
"""

import pytest

from slideocam import DesignParameters, Material

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)

P_STUDY = 0.020        # m
MT_STUDY = 1.2         # N.m
WIDTH_STUDY = 0.020    # m

# (phi_cam_mm, phi_bear_mm)
CASE_SHAFTS = {
    "a": (2.5, 5.0),
    "b": (0.5, 8.0),
    "c": (2.0, 8.0),
    "d": (3.8, 6.7),
}


def study_material() -> Material:
    return Material(E=210e9, tau_c_max=150e6, tau_b_max=150e6, P_max=800e6)


def study_case(name: str, Mt: float = MT_STUDY) -> DesignParameters:
    phi_cam_mm, phi_bear_mm = CASE_SHAFTS[name]
    a4 = phi_bear_mm / 2 * 1e-3
    eta = (a4 + phi_cam_mm / 2 * 1e-3) / P_STUDY
    return DesignParameters(
        p=P_STUDY,
        eta=eta,
        a4=a4,
        b=phi_cam_mm / 2 * 1e-3,
        n=1,
        Mt=Mt,
        width_a=WIDTH_STUDY,
        material=study_material(),
    )


@pytest.fixture
def material():
    return study_material()


@pytest.fixture
def case_d():
    return study_case("d")
