"""HTTP service: status codes, schema-valid payloads, scalar/sweep
consistency, CORS."""

import json

import jsonschema
import pytest
from fastapi.testclient import TestClient

from slideocam.config import load_schema
from slideocam.service import create_app
from slideocam.units import round9

from test_cli import GOOD_DESIGN, GOOD_REQUEST


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/api/v1/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_evaluate_matches_schema_and_is_consistent(client):
    r = client.post("/api/v1/evaluate", json=GOOD_DESIGN)
    assert r.status_code == 200
    doc = r.json()
    jsonschema.Draft202012Validator(load_schema("evaluate_response")).validate(doc)

    assert doc["delta_ext"] <= 0.0
    assert len(doc["profile"]) == len(doc["pitch"]) == 721
    assert len(doc["constraints"]) == 7

    scal = doc["scalars"]
    assert scal["mu_max"] == max(mu for _, mu in doc["mu_sweep"])
    assert scal["P_peak_MPa"] == max(p for _, p in doc["hertz_sweep"])
    assert scal["mu_max"] == pytest.approx(29.6778122, abs=1e-6)
    assert scal["phi_cam_mm"] == pytest.approx(3.8)
    assert scal["phi_bear_mm"] == pytest.approx(6.7)

    start = doc["interval"]["start_deg"]
    end = doc["interval"]["end_deg"]
    assert doc["mu_sweep"][0][0] == pytest.approx(start, abs=1e-6)
    assert doc["mu_sweep"][-1][0] == pytest.approx(end, abs=1e-6)

    # every float already carries at most nine significant digits
    assert doc == round9(doc)


def test_evaluate_rejects_malformed_body(client):
    r = client.post(
        "/api/v1/evaluate",
        content=b"{nope",
        headers={"content-type": "application/json"},
    )
    assert r.status_code == 400
    assert r.json()["detail"]["error"] == "malformed-json"


def test_evaluate_rejects_schema_violation(client):
    doc = dict(GOOD_DESIGN)
    doc["surprise"] = 1
    r = client.post("/api/v1/evaluate", json=doc)
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "invalid-config"


def test_evaluate_rejects_failing_design_with_report(client):
    doc = dict(GOOD_DESIGN)
    doc["design"] = dict(doc["design"], a4_mm=10.5)
    r = client.post("/api/v1/evaluate", json=doc)
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["error"] == "constraints-violated"
    failed = {c["id"] for c in detail["constraints"] if not c["satisfied"]}
    assert "RollerSpacing" in failed


def test_evaluate_rejects_singular_two_cam_design(client):
    doc = dict(GOOD_DESIGN)
    doc["design"] = dict(doc["design"], n=2)
    r = client.post("/api/v1/evaluate", json=doc)
    assert r.status_code == 422


def test_evaluate_keeps_strength_violations_inspectable(client):
    # phi_cam = 2.5 mm cannot carry 1.2 N.m, but the geometry is sound,
    # so the response is a full evaluation with the ledger flagged.
    doc = dict(GOOD_DESIGN)
    doc["design"] = dict(
        doc["design"], eta=0.1875, a4_mm=2.5, b_mm=1.25, width_a_mm=20.0
    )
    r = client.post("/api/v1/evaluate", json=doc)
    assert r.status_code == 200
    body = r.json()
    jsonschema.Draft202012Validator(load_schema("evaluate_response")).validate(body)
    assert body["scalars"]["mu_max"] == pytest.approx(8.019, abs=0.05)
    verdicts = {c["id"]: c["satisfied"] for c in body["constraints"]}
    assert not verdicts["CamShear"]
    assert not verdicts["HertzLimit"]
    assert verdicts["EtaLowerBound"] and verdicts["RollerSpacing"]


def test_synthesize_matches_schema(client):
    r = client.post("/api/v1/synthesize", json=GOOD_REQUEST)
    assert r.status_code == 200
    doc = r.json()
    jsonschema.Draft202012Validator(load_schema("synthesize_response")).validate(doc)
    assert doc["design"]["n"] == 1
    assert doc["scalars"]["mu_max"] == pytest.approx(29.6778122, abs=1e-6)
    assert all(c["satisfied"] for c in doc["constraints"])
    assert doc == round9(doc)


def test_synthesize_infeasible_409(client):
    req = dict(GOOD_REQUEST, mu_limit_deg=0.1, max_cams=2, max_pitch_steps=2)
    r = client.post("/api/v1/synthesize", json=req)
    assert r.status_code == 409
    detail = r.json()["detail"]
    assert detail["error"] == "infeasible"
    assert len(detail["trace"]) == 4
    assert detail["trace"][1]["verdict"] == "singular-orientation"


def test_synthesize_rejects_bad_request(client):
    r = client.post("/api/v1/synthesize", json={"Mt_Nm": 1.2})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "invalid-config"


def test_cors_header_present(client):
    r = client.get("/api/v1/health", headers={"Origin": "http://localhost:5173"})
    assert r.headers.get("access-control-allow-origin") == "*"


def test_byte_identical_responses(client):
    a = client.post("/api/v1/evaluate", json=GOOD_DESIGN)
    b = client.post("/api/v1/evaluate", json=GOOD_DESIGN)
    assert a.content == b.content
    assert json.loads(a.content) == json.loads(b.content)
