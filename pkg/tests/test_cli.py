"""Command-line behaviour: formats, exit codes, error reporting."""

import json

import jsonschema
import pytest

from slideocam.cli import main
from slideocam.config import load_schema

GOOD_DESIGN = {
    "design": {
        "p_mm": 20.0, "eta": 0.2625, "a4_mm": 3.35, "b_mm": 1.87511914,
        "n": 1, "Mt_Nm": 1.2, "width_a_mm": 21.0,
    },
    "material": {
        "E_MPa": 210000.0, "tau_c_max_MPa": 150.0,
        "tau_b_max_MPa": 150.0, "P_max_MPa": 800.0,
    },
}

GOOD_REQUEST = {
    "Mt_Nm": 1.2,
    "p0_mm": 20.0,
    "material": GOOD_DESIGN["material"],
    "mu_limit_deg": 30.0,
    "max_cams": 4,
    "max_pitch_steps": 4,
}


@pytest.fixture
def design_file(tmp_path):
    path = tmp_path / "design.json"
    path.write_text(json.dumps(GOOD_DESIGN))
    return str(path)


@pytest.fixture
def request_file(tmp_path):
    path = tmp_path / "request.json"
    path.write_text(json.dumps(GOOD_REQUEST))
    return str(path)


def test_profile_csv(design_file, tmp_path):
    out = tmp_path / "profile.csv"
    assert main(["profile", "--config", design_file, "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "psi_rad,u_mm,v_mm,up_mm,vp_mm"
    assert len(lines) == 722
    first = lines[1].split(",")
    assert len(first) == 5
    assert float(first[0]) == pytest.approx(-1.139432489, abs=1e-6)


def test_profile_csv_sample_override(design_file, tmp_path):
    out = tmp_path / "profile.csv"
    assert main(["profile", "--config", design_file, "--out", str(out),
                 "--samples", "101"]) == 0
    assert len(out.read_text().splitlines()) == 102


def test_profile_svg(design_file, tmp_path):
    out = tmp_path / "profile.svg"
    assert main(["profile", "--config", design_file, "--format", "svg",
                 "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<?xml")
    assert svg.count('class="roller"') == 3
    assert 'stroke-dasharray' in svg
    assert 'class="profile"' in svg


def test_profile_json_echoes_config(design_file, tmp_path):
    out = tmp_path / "profile.json"
    assert main(["profile", "--config", design_file, "--format", "json",
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["columns"] == ["psi_rad", "u_mm", "v_mm", "up_mm", "vp_mm"]
    assert len(doc["samples"]) == 721
    assert doc["config"]["design"]["p_mm"] == pytest.approx(20.0)
    assert doc["config"]["material"]["E_MPa"] == pytest.approx(210000.0)


def test_profile_stdout(design_file, capsys):
    assert main(["profile", "--config", design_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "psi_rad,u_mm,v_mm,up_mm,vp_mm"


def test_analyze_table(design_file, capsys):
    assert main(["analyze", "--config", design_file]) == 0
    text = capsys.readouterr().out
    assert "mu_max" in text and "29.677812" in text
    assert "F_axial" in text and "376.991118" in text
    assert "constant equivalent radius" in text
    assert "local-curvature equivalent radius" in text
    for cid in ("EtaLowerBound", "RollerSpacing", "ShaftClearance",
                "PressureAngleLimit", "CamShear", "BearingShear", "HertzLimit"):
        assert cid in text


def test_analyze_json_variants(design_file, capsys):
    assert main(["analyze", "--config", design_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["r_eq_variant"] == "paper"
    assert doc["scalars"]["P_peak_MPa"] == pytest.approx(790.781599, abs=1e-4)
    assert doc["hertz"]["paper"]["P_peak_MPa"] == pytest.approx(790.781599, abs=1e-4)
    assert doc["hertz"]["local"]["P_peak_MPa"] == pytest.approx(672.451117, abs=1e-4)

    assert main(["analyze", "--config", design_file, "--json",
                 "--req-variant", "local"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["r_eq_variant"] == "local"
    assert doc["scalars"]["P_peak_MPa"] == pytest.approx(672.451117, abs=1e-4)


def test_synthesize_report(request_file, capsys):
    assert main(["synthesize", "--config", request_file]) == 0
    text = capsys.readouterr().out
    assert "search trace" in text
    assert "1.788854" in text      # minimal bearing diameter in first entry
    assert "3.750238" in text      # minimal camshaft diameter
    assert "accepted design" in text


def test_synthesize_json_matches_schema(request_file, capsys):
    assert main(["synthesize", "--config", request_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.Draft202012Validator(load_schema("synthesize_response")).validate(doc)
    assert doc["design"]["a4_mm"] == pytest.approx(3.35)
    assert doc["trace"][0]["verdict"] == "ok"


def test_synthesize_infeasible_exit_code(tmp_path, capsys):
    req = dict(GOOD_REQUEST, mu_limit_deg=0.1, max_cams=2, max_pitch_steps=2)
    path = tmp_path / "req.json"
    path.write_text(json.dumps(req))
    assert main(["synthesize", "--config", str(path)]) == 3
    err = capsys.readouterr().err
    assert "no feasible design" in err

    assert main(["synthesize", "--config", str(path), "--json"]) == 3
    doc = json.loads(capsys.readouterr().out)
    assert doc["error"] == "infeasible"
    assert len(doc["trace"]) == 4


def test_missing_config_is_io_error(capsys):
    assert main(["analyze", "--config", "/nonexistent/nope.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_malformed_json_is_invalid(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{]")
    assert main(["analyze", "--config", str(path)]) == 2


def test_schema_violation_is_invalid(tmp_path, capsys):
    doc = dict(GOOD_DESIGN)
    doc["design"] = dict(doc["design"])
    del doc["design"]["eta"]
    path = tmp_path / "short.json"
    path.write_text(json.dumps(doc))
    assert main(["analyze", "--config", str(path)]) == 2
    assert "eta" in capsys.readouterr().err


def test_rejected_design_names_the_rule(tmp_path, capsys):
    doc = dict(GOOD_DESIGN)
    doc["design"] = dict(doc["design"], a4_mm=10.5)
    path = tmp_path / "wide.json"
    path.write_text(json.dumps(doc))
    assert main(["profile", "--config", str(path)]) == 2
    assert "RollerSpacing" in capsys.readouterr().err


def test_write_failure_is_io_error(design_file):
    assert main(["profile", "--config", design_file,
                 "--out", "/nonexistent/dir/out.csv"]) == 1
