"""HTTP service tests: endpoints, error mapping, determinism."""

import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from skyline.service import create_app

from conftest import pelican_doc, spark_doc, synthetic_doc


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


# ------------------------------------------------------------ presets

def test_presets_content(client):
    response = client.get("/api/presets")
    assert response.status_code == 200
    body = response.json()
    assert body["model_version"]
    presets = body["presets"]
    ncs = next(p for p in presets["platforms"] if p["name"] == "Intel NCS")
    assert ncs["board_mass_g"] == 47.0
    rows = [(a["algorithm"], a["platform"], a["throughput_hz"]) for a in presets["algorithms"]]
    assert ("DroNet", "Nvidia TX2", 178.0) in rows
    assert all(a["provenance"] for a in presets["algorithms"])


def test_presets_stable_etag(client):
    first = client.get("/api/presets")
    second = client.get("/api/presets")
    assert first.headers["etag"] == second.headers["etag"]
    assert first.content == second.content


# ------------------------------------------------------------ analyze

def test_analyze_pelican(client):
    response = client.post("/api/analyze", json=pelican_doc())
    assert response.status_code == 200
    body = response.json()
    assert body["request_echo"] == pelican_doc()
    analysis = body["analysis"]
    assert analysis["bound"]["kind"] == "PhysicsBound"
    assert analysis["gap"]["ratio"] == pytest.approx(178.0 / 43.0, rel=1e-9)


def test_analyze_empty_body_400(client):
    response = client.post("/api/analyze", content=b"")
    assert response.status_code == 400
    assert "empty" in response.json()["error"]["message"]


def test_analyze_schema_violation_carries_path(client):
    doc = synthetic_doc()
    del doc["uav"]["rotor_pull_gf"]
    del doc["model"]
    response = client.post("/api/analyze", json=doc)
    assert response.status_code == 400
    assert response.json()["error"]["path"] == "uav.rotor_pull_gf"


def test_analyze_cannot_climb_422(client):
    doc = {"uav": {"name": "UAV-B"}, "model": {"acceleration_strategy": "vertical_headroom"}}
    response = client.post("/api/analyze", json=doc)
    assert response.status_code == 422
    error = response.json()["error"]
    assert error["thrust_to_weight"] == pytest.approx(0.9508, rel=1e-3)


def test_analyze_rejects_nonfinite_numbers(client):
    doc = synthetic_doc()
    doc["sensor"]["range_m"] = float("inf")
    response = client.post("/api/analyze", content=json.dumps(doc).encode())
    assert response.status_code == 400
    assert "sensor.range_m" in response.json()["error"]["path"]


# ------------------------------------------------------------ curve

def test_curve_endpoint_endpoints(client):
    body = {"config": synthetic_doc(), "f_min_hz": 0.2, "f_max_hz": 10000.0, "samples": 200}
    response = client.post("/api/curve", json=body)
    assert response.status_code == 200
    series = response.json()["series"]
    assert series["velocities_mps"][0] == pytest.approx(1.99206336708, rel=1e-9)
    assert series["velocities_mps"][-1] == pytest.approx(31.617776997, rel=1e-9)
    assert series["roof_velocity_mps"] == pytest.approx(31.6227766017, rel=1e-9)
    assert len(series["frequencies_hz"]) == 200


def test_curve_two_samples(client):
    body = {"config": synthetic_doc(), "f_min_hz": 1.0, "f_max_hz": 100.0, "samples": 2}
    series = client.post("/api/curve", json=body).json()["series"]
    assert series["frequencies_hz"] == [1.0, 100.0]


def test_curve_monotone(client):
    body = {"config": pelican_doc(), "f_min_hz": 0.5, "f_max_hz": 500.0, "samples": 64}
    series = client.post("/api/curve", json=body).json()["series"]
    velocities = series["velocities_mps"]
    assert all(b >= a for a, b in zip(velocities, velocities[1:]))


def test_curve_invalid_range_400(client):
    body = {"config": synthetic_doc(), "f_min_hz": 100.0, "f_max_hz": 1.0}
    assert client.post("/api/curve", json=body).status_code == 400
    body = {"config": synthetic_doc(), "f_min_hz": 1.0, "f_max_hz": 100.0, "samples": 1}
    assert client.post("/api/curve", json=body).status_code == 400


# ------------------------------------------------------------ sweep

def test_sweep_endpoint_embeds_errors(client):
    body = {
        "config": {"uav": {"name": "UAV-A"}},
        "knob": "payload_weight_g",
        "values": [590.0, 640.0, 690.0, 800.0],
    }
    response = client.post("/api/sweep", json=body)
    assert response.status_code == 200
    rows = response.json()["sweep"]
    assert len(rows) == 4
    assert "analysis" in rows[0] and "error" in rows[3]
    velocities = [r["analysis"]["v_safe_mps"] for r in rows if "analysis" in r]
    assert velocities == sorted(velocities, reverse=True)


def test_sweep_tdp(client):
    body = {"config": spark_doc("Nvidia AGX"), "knob": "compute_tdp_w", "values": [30.0, 15.0]}
    rows = client.post("/api/sweep", json=body).json()["sweep"]
    assert rows[1]["analysis"]["v_safe_mps"] > rows[0]["analysis"]["v_safe_mps"]


def test_sweep_bad_knob_types_400(client):
    body = {"config": pelican_doc(), "knob": 42, "values": [1]}
    assert client.post("/api/sweep", json=body).status_code == 400
    body = {"config": pelican_doc(), "knob": "compute_tdp_w", "values": "nope"}
    assert client.post("/api/sweep", json=body).status_code == 400


# ------------------------------------------------------------ determinism

def test_identical_requests_identical_bytes(client):
    payload = json.dumps(pelican_doc()).encode()

    def post(_):
        return client.post("/api/analyze", content=payload,
                           headers={"content-type": "application/json"}).content

    with ThreadPoolExecutor(max_workers=8) as pool:
        bodies = list(pool.map(post, range(16)))
    assert len(set(bodies)) == 1


def test_request_order_independence(client):
    a1 = client.post("/api/analyze", json=pelican_doc()).content
    client.post("/api/analyze", json=spark_doc("Nvidia AGX"))
    client.post("/api/sweep", json={"config": pelican_doc(), "knob": "compute_tdp_w", "values": [5.0]})
    a2 = client.post("/api/analyze", json=pelican_doc()).content
    assert a1 == a2


def test_twelve_significant_digit_rendering(client):
    content = client.post("/api/analyze", json=pelican_doc()).content.decode()
    for token in content.replace("{", ",").replace("}", ",").replace("[", ",").replace("]", ",").split(","):
        if ":" in token:
            token = token.split(":", 1)[1]
        token = token.strip()
        if not token or token.startswith('"'):
            continue
        mantissa = token.lstrip("-").replace(".", "").split("e")[0].lstrip("0")
        assert len(mantissa) <= 12, f"more than 12 significant digits in {token!r}"
