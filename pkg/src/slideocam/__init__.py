"""Design toolkit for cam-roller prismatic transmissions.

A camshaft carrying one or more conjugate cams drives a follower fitted
with a row of equally spaced rollers; each camshaft turn advances the
follower by exactly one pitch.  This package synthesizes the cam
profile, evaluates pressure angles, transmitted forces and contact
pressures over the active interval, checks the design rules, and sizes
a transmission for a given torque.
"""

from .config import AnalysisOptions, ConfigError, config_from_design, design_from_config, request_from_config
from .errors import (
    DegenerateCurve,
    DegenerateEta,
    Infeasible,
    NoRootFound,
    SingularOrientation,
    SlideocamError,
    Undercut,
)
from .geometry import (
    CamProfile,
    Coefficients,
    DesignParameters,
    ProfilePoint,
    coefficients,
    contact_point,
    displacement,
    extended_angle,
    generate_pitch_curve,
    generate_profile,
    pitch_point,
)
from .kinetostatics import (
    ActiveInterval,
    KinetostaticReport,
    active_interval,
    axial_load,
    cam_local_radius,
    curvature_numeric,
    curvature_pitch,
    curvature_profile,
    interval_grid,
    kinetostatic_report,
    pressure_angle,
    pressure_angle_extremes,
    transmitted_force,
)
from .strength import (
    HertzReport,
    Material,
    ReqVariant,
    ShaftDiameters,
    equivalent_radius,
    equivalent_radius_local,
    hertz_pressure,
    hertz_sweep,
    min_bearing_shaft_diameter,
    min_camshaft_diameter,
    min_width,
    shaft_diameters,
)
from .synthesis import (
    CONSTRAINT_IDS,
    GEOMETRY_GATES,
    ConstraintCheck,
    ConstraintReport,
    SynthesisOutcome,
    SynthesisRequest,
    TraceEntry,
    check_constraints,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisOptions",
    "ActiveInterval",
    "CamProfile",
    "CONSTRAINT_IDS",
    "Coefficients",
    "ConfigError",
    "ConstraintCheck",
    "ConstraintReport",
    "DegenerateCurve",
    "DegenerateEta",
    "DesignParameters",
    "GEOMETRY_GATES",
    "HertzReport",
    "Infeasible",
    "KinetostaticReport",
    "Material",
    "NoRootFound",
    "ProfilePoint",
    "ReqVariant",
    "ShaftDiameters",
    "SingularOrientation",
    "SlideocamError",
    "SynthesisOutcome",
    "SynthesisRequest",
    "TraceEntry",
    "Undercut",
    "active_interval",
    "axial_load",
    "cam_local_radius",
    "check_constraints",
    "coefficients",
    "config_from_design",
    "contact_point",
    "curvature_numeric",
    "curvature_pitch",
    "curvature_profile",
    "design_from_config",
    "displacement",
    "equivalent_radius",
    "equivalent_radius_local",
    "extended_angle",
    "generate_pitch_curve",
    "generate_profile",
    "hertz_pressure",
    "hertz_sweep",
    "interval_grid",
    "kinetostatic_report",
    "min_bearing_shaft_diameter",
    "min_camshaft_diameter",
    "min_width",
    "pitch_point",
    "pressure_angle",
    "pressure_angle_extremes",
    "request_from_config",
    "shaft_diameters",
    "synthesize",
    "transmitted_force",
]
