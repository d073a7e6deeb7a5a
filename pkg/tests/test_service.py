"""Service endpoints: shapes, status codes, and wire formats."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from ineqcert.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_meta(client):
    r = client.get("/")
    assert r.status_code == 200
    data = r.json()
    assert data["name"] == "ineqcert"
    assert data["records"] >= 34
    assert data["monotones"] == 7
    assert data["constants"] == 5


def test_list_records(client):
    r = client.get("/records")
    assert r.status_code == 200
    ids = {row["id"] for row in r.json()}
    assert "thm1_upper" in ids and "mono_f1" in ids


def test_list_filtered(client):
    r = client.get("/records", params={"section": "sec2"})
    assert r.status_code == 200
    assert all(row["section"] == "sec2" for row in r.json())
    r = client.get("/records", params={"section": "bogus"})
    assert r.status_code == 422


def test_show_record(client):
    r = client.get("/records/thm1_upper")
    assert r.status_code == 200
    data = r.json()
    assert data["statement"].startswith("sinc(x) <=")
    assert data["relation"] == "<="
    assert data["sharp_at"] == ["0"]
    assert client.get("/records/nope").status_code == 404


def test_verify_endpoint(client):
    r = client.post("/verify/thm1_lower", json={})
    assert r.status_code == 200
    data = r.json()
    assert data["status"] == "proven"
    assert data["schema"] == "ineqcert.certificate/1"
    assert data["cells"]
    cell = data["cells"][0]
    assert float.fromhex(cell["lo"]["hex"]) == float(cell["lo"]["dec"])
    assert client.post("/verify/nope", json={}).status_code == 404


def test_verify_monotone_endpoint(client):
    r = client.post("/verify/mono_f_alpha", json={})
    assert r.status_code == 200
    data = r.json()
    assert data["status"] == "proven"
    assert data["limits"]["lo"]["ok"] and data["limits"]["hi"]["ok"]


def test_verify_depth_override(client):
    r = client.post("/verify/thm1_upper", json={"depth": 3})
    assert r.status_code == 200
    assert r.json()["status"] == "inconclusive"


def test_constants_endpoint(client):
    r = client.get("/constants")
    assert r.status_code == 200
    rows = {row["id"]: row for row in r.json()}
    assert abs(rows["const_alpha"]["reference"] - 2.75194) < 1e-9
    assert rows["const_alpha"]["within_tolerance"]
    assert not rows["const_alpha2"]["within_tolerance"]


def test_roots_endpoint(client):
    r = client.get("/roots")
    assert r.status_code == 200
    data = r.json()
    by_id = {row["id"]: row for row in data["roots"]}
    assert by_id["root_x0"]["passed"] and by_id["root_x1"]["passed"]
    assert data["value_at_x1"]["passed"]
    assert abs(data["value_at_x1"]["enclosure_lo"] - 2.7219) < 5e-4


def test_series_endpoint(client):
    r = client.get("/series/xcot", params={"terms": 2})
    assert r.status_code == 200
    data = r.json()
    assert data["constant"]["numerator"] == "1"
    assert [c["numerator"] for c in data["coefficients"]] == ["-1", "-1"]
    assert [c["denominator"] for c in data["coefficients"]] == ["3", "45"]
    assert client.get("/series/unknown").status_code == 404


def test_parse_endpoint(client):
    r = client.post("/parse", json={"text": "sinc(x)^2 + xcot(x)"})
    assert r.status_code == 200 and r.json()["ok"]
    r = client.post("/parse", json={"text": "1 +"})
    data = r.json()
    assert not data["ok"]
    assert data["offset"] == 3
    r = client.post("/parse", json={"text": "x >= x on [0, 1]", "statement": True})
    assert r.json()["ok"]


def test_check_endpoint(client):
    r = client.post("/check", json={"statements": "bad: sinc(x) > 1 on [1/10, 1]\ngood: sinc(x) <= 1 on [0, 1] sharp at {0}\n"})
    assert r.status_code == 200
    data = r.json()
    assert not data["all_proven"]
    by_id = {row["id"]: row for row in data["results"]}
    assert by_id["bad"]["status"] == "refuted"
    ce = by_id["bad"]["counterexample"]
    assert 0.1 <= float(ce["x"]["dec"]) <= 1.0
    assert float(ce["lhs"]["dec"]) < float(ce["rhs"]["dec"])
    assert by_id["good"]["status"] == "proven"


def test_gaps_endpoint(client):
    r = client.get("/gaps")
    assert r.status_code == 200
    rows = {row["id"]: row for row in r.json()}
    assert rows["gap_thm1_lower"]["passed"]
    assert rows["gap_thm1_lower"]["rigorous_upper"] < 0.01
    assert rows["gap_newineq2"]["reported_bound_lo"] == 1.45


def test_show_monotone_record(client):
    r = client.get("/records/mono_f1")
    assert r.status_code == 200
    data = r.json()
    assert data["kind"] == "monotone"
    assert "increasing" in data["statement"]
