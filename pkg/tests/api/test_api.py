import pytest
from fastapi.testclient import TestClient

from semiquant.backend.core.constants import TOOL_VERSION
from semiquant.backend.services.app_startup.app_startup_service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": TOOL_VERSION}


def test_request_id_is_echoed(client):
    response = client.get("/health", headers={"Request-ID": "run-42"})
    assert response.headers["Request-ID"] == "run-42"


def test_fresh_request_id_and_timing_header(client):
    response = client.post("/field/spectrum", json={"m1sq": 1, "m2sq": 4})
    assert response.status_code == 200
    assert len(response.headers["Request-ID"]) == 32
    assert response.headers["Server-Timing"].startswith("app;dur=")


def test_bracket_counterexample(client):
    response = client.post("/bracket", json={"a": "q*x", "b": "q*p*x", "jacobi": "p*k^2"})
    assert response.status_code == 200
    body = response.json()
    assert body["command"] == "bracket"
    assert body["payload"]["kind"] == "bracket"
    assert body["payload"]["jacobi"]["defect"] == "(1/2)*hbar^2"


def test_bracket_parse_error_is_bad_request(client):
    response = client.post("/bracket", json={"a": "q*(", "b": "p"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["error"] == "ExprSyntaxError"
    assert detail["position"] == 3


def test_bracket_request_validation(client):
    response = client.post("/bracket", json={"a": "q"})
    assert response.status_code == 422


def test_field_positivity(client):
    response = client.post("/field/positivity", json={"m1sq": 1, "m2sq": 4, "g": 1, "hbar2": 0})
    assert response.status_code == 200
    assert response.json()["payload"]["positivity"]["verdict"] == "NotPositive"


def test_field_spectrum(client):
    response = client.post("/field/spectrum", json={"m1sq": 1, "m2sq": 4})
    assert response.status_code == 200
    spectrum = response.json()["payload"]["spectrum"]
    assert spectrum["R"] == pytest.approx(3.0)


def test_field_params_error_names_parameter(client):
    response = client.post("/field/spectrum", json={"m1sq": -1, "m2sq": 4})
    assert response.status_code == 400
    assert response.json()["detail"]["parameter"] == "m1sq"


def test_field_simulate(client):
    body = {"m1sq": 1, "m2sq": 4, "g": 1, "hbar2": 0, "k_grid": [0.0], "dtau": 0.01,
            "n_steps": 2000, "n_burnin": 100, "seed": 3}
    response = client.post("/field/simulate", json=body)
    assert response.status_code == 200
    assert response.json()["payload"]["simulation"]["seed"] == 3


def test_planewave(client):
    response = client.post("/planewave", json={"h_grid": [0.5, 1.0], "n_samples": 200})
    assert response.status_code == 200
    payload = response.json()["payload"]
    assert payload["incompatible"] is True
    violated = {v["f_kind"]: v["violated"] for v in payload["violations"]}
    assert violated["standard_s"] and not violated["quantum_quantum"]
