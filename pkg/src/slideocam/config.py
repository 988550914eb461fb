"""Reading and writing design files.

Files speak the workshop dialect (mm, degrees, MPa, N.m); everything past
this module is SI.  Validation is two-stage: the JSON schema catches shape
errors, then the constructors apply the physical gates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import degrees, radians

from . import geometry, strength, synthesis
from .errors import SlideocamError
from .units import MM, MPA

N_SAMPLES_DEFAULT = 721


class ConfigError(SlideocamError):
    """A config document is malformed or fails schema validation."""


@dataclass(frozen=True)
class AnalysisOptions:
    """Optional knobs from the ``analysis`` block of a design file."""

    n_samples: int = N_SAMPLES_DEFAULT
    variant: strength.ReqVariant = strength.ReqVariant.PAPER_CONSTANT
    mu_limit: float = synthesis.MU_LIMIT_DEFAULT  # rad


_SCHEMA_CACHE: dict[str, dict] = {}


def load_schema(name: str) -> dict:
    """Return a schema shipped with the package, e.g. ``"design_config"``."""
    if name not in _SCHEMA_CACHE:
        path = resources.files("slideocam.schemas").joinpath(f"{name}.schema.json")
        _SCHEMA_CACHE[name] = json.loads(path.read_text(encoding="utf-8"))
    return _SCHEMA_CACHE[name]


def validate_against(name: str, doc: object) -> None:
    """Raise ConfigError if ``doc`` does not match the named schema."""
    import jsonschema

    schema = load_schema(name)
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path) or "(root)"
        raise ConfigError(f"{name}: {where}: {first.message}")


def _material_from(doc: dict) -> strength.Material:
    return strength.Material(
        E=doc["E_MPa"] * MPA,
        tau_c_max=doc["tau_c_max_MPa"] * MPA,
        tau_b_max=doc["tau_b_max_MPa"] * MPA,
        P_max=doc["P_max_MPa"] * MPA,
    )


def _material_doc(material: strength.Material) -> dict:
    return {
        "E_MPa": material.E / MPA,
        "tau_c_max_MPa": material.tau_c_max / MPA,
        "tau_b_max_MPa": material.tau_b_max / MPA,
        "P_max_MPa": material.P_max / MPA,
    }


def design_from_config(doc: dict) -> tuple[geometry.DesignParameters, AnalysisOptions]:
    """Turn a validated design document into parameters plus options.

    Raises ConfigError on schema violations; the DesignParameters
    constructor may still raise ValueError for non-finite garbage that
    happens to satisfy the schema types.
    """
    validate_against("design_config", doc)
    d = doc["design"]
    params = geometry.DesignParameters(
        p=d["p_mm"] * MM,
        eta=d["eta"],
        a4=d["a4_mm"] * MM,
        b=d["b_mm"] * MM,
        n=d["n"],
        Mt=d["Mt_Nm"],
        width_a=d["width_a_mm"] * MM,
        material=_material_from(doc["material"]),
    )
    a = doc.get("analysis", {})
    variant = (
        strength.ReqVariant.LOCAL_CURVATURE
        if a.get("r_eq_variant") == "local"
        else strength.ReqVariant.PAPER_CONSTANT
    )
    options = AnalysisOptions(
        n_samples=a.get("n_samples", N_SAMPLES_DEFAULT),
        variant=variant,
        mu_limit=radians(a.get("mu_limit_deg", 30.0)),
    )
    return params, options


def config_from_design(
    params: geometry.DesignParameters,
    options: AnalysisOptions | None = None,
) -> dict:
    """Inverse of design_from_config, for echoing and file export."""
    if params.material is None:
        raise ConfigError("design has no material attached; config files require one")
    doc = {
        "design": {
            "p_mm": params.p / MM,
            "eta": params.eta,
            "a4_mm": params.a4 / MM,
            "b_mm": params.b / MM,
            "n": params.n,
            "Mt_Nm": params.Mt,
            "width_a_mm": params.width_a / MM,
        },
        "material": _material_doc(params.material),
    }
    if options is not None:
        doc["analysis"] = {
            "n_samples": options.n_samples,
            "r_eq_variant": options.variant.value,
            "mu_limit_deg": degrees(options.mu_limit),
        }
    return doc


def request_from_config(doc: dict) -> synthesis.SynthesisRequest:
    """Turn a validated synthesis request document into a request object."""
    validate_against("synthesis_request", doc)
    return synthesis.SynthesisRequest(
        Mt=doc["Mt_Nm"],
        p0=doc["p0_mm"] * MM,
        material=_material_from(doc["material"]),
        mu_limit=radians(doc.get("mu_limit_deg", 30.0)),
        max_cams=doc.get("max_cams", 4),
        max_pitch_steps=doc.get("max_pitch_steps", 4),
    )


def load_json_file(path: str) -> dict:
    """Read a JSON document from disk.  OSError propagates to the caller."""
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON: {exc}") from exc
