"""HTTP service endpoints, guards, and error mapping."""

from __future__ import annotations

import json
import math

import pytest
from fastapi.testclient import TestClient

from clothoidal import __version__
from clothoidal.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def circle_input(k: int = 4) -> dict:
    couples = []
    for j in range(k):
        theta = 2.0 * math.pi * j / k
        couples.append(
            {"p": [math.cos(theta), math.sin(theta)], "alpha": theta + math.pi / 2.0}
        )
    return {"closed": True, "couples": couples}


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert len(response.content) < 1024
    data = response.json()
    assert data["status"] == "ok"
    assert data["version"] == __version__


def test_subdivide_circle(client):
    body = {"input": circle_input(), "scheme": "lr1", "levels": 3}
    response = client.post("/api/subdivide", json=body)
    assert response.status_code == 200
    data = response.json()
    assert len(data["levels"]) == 4
    final = data["levels"][-1]["couples"]
    assert len(final) == 4 * 2**3
    for couple in final:
        x, y = couple["p"]
        assert abs(math.hypot(x, y) - 1.0) <= 1e-4
    assert data["curvature"] is not None
    assert data["scheme"]["kind"] == "lane_riesenfeld"


def test_identical_requests_get_identical_bytes(client):
    body = json.dumps({"input": circle_input(), "scheme": "lr2", "levels": 2})
    first = client.post("/api/subdivide", content=body)
    second = client.post("/api/subdivide", content=body)
    assert first.status_code == 200
    assert first.content == second.content


def test_coincident_points_is_unprocessable(client):
    doc = {
        "closed": False,
        "couples": [
            {"p": [0, 0], "alpha": 0},
            {"p": [0, 0], "alpha": 1},
            {"p": [1, 0], "alpha": 0},
        ],
    }
    response = client.post("/api/subdivide", json={"input": doc})
    assert response.status_code == 422
    error = response.json()["error"]
    assert error["code"] == "coincident_points"
    assert error["index"] == 0


def test_unfittable_geometry_is_unprocessable(client):
    # A closed collinear ring: the wrap-around secant opposes the tangents.
    doc = {
        "closed": True,
        "couples": [
            {"p": [0, 0], "alpha": 0},
            {"p": [1, 0], "alpha": 0},
            {"p": [2, 0], "alpha": 0},
        ],
    }
    response = client.post("/api/subdivide", json={"input": doc, "levels": 1})
    assert response.status_code == 422
    error = response.json()["error"]
    assert error["code"] == "domainviolation"
    assert error["index"] == 2


def test_levels_out_of_range(client):
    for levels in (-1, 11):
        response = client.post(
            "/api/subdivide", json={"input": circle_input(), "levels": levels}
        )
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "levels_out_of_range"


def test_too_many_couples(client):
    couples = [{"p": [float(j), 0.0], "alpha": 0.0} for j in range(513)]
    body = {"input": {"closed": False, "couples": couples}, "levels": 1}
    response = client.post("/api/subdivide", json=body)
    assert response.status_code == 413
    assert response.json()["error"]["code"] == "too_many_couples"


def test_oversized_body(client):
    blob = b'{"pad":"' + b"a" * (2 * 1024 * 1024) + b'"}'
    response = client.post("/api/subdivide", content=blob)
    assert response.status_code == 413
    assert response.json()["error"]["code"] == "request_too_large"


def test_get_subdivide_not_allowed(client):
    assert client.get("/api/subdivide").status_code == 405


def test_invalid_json(client):
    response = client.post("/api/subdivide", content=b"{")
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "parse_error"


def test_non_object_body(client):
    response = client.post("/api/subdivide", content=b"[1,2]")
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "not_object"


def test_missing_input_document(client):
    response = client.post("/api/subdivide", json={"levels": 1})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "input"


def test_want_curvature_toggle(client):
    body = {"input": circle_input(), "levels": 1, "want_curvature": False}
    response = client.post("/api/subdivide", json=body)
    assert response.status_code == 200
    assert response.json()["curvature"] is None

    body["want_curvature"] = "yes"
    response = client.post("/api/subdivide", json=body)
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "want_curvature"


def test_scheme_validation(client):
    response = client.post(
        "/api/subdivide", json={"input": circle_input(), "scheme": 2}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "scheme"

    response = client.post(
        "/api/subdivide", json={"input": circle_input(), "scheme": "lr9"}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "scheme"


def test_fit_parameter_validation(client):
    response = client.post(
        "/api/subdivide", json={"input": circle_input(), "newton_steps": 9}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "newton_steps"

    response = client.post(
        "/api/subdivide", json={"input": circle_input(), "quad_nodes": 1}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "quadrature_nodes"


def test_root_without_ui(client):
    response = client.get("/")
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "ui_missing"


def test_root_with_ui(tmp_path):
    (tmp_path / "index.html").write_text("<!doctype html><title>editor</title>")
    with TestClient(create_app(ui_dir=tmp_path)) as ui_client:
        response = ui_client.get("/")
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/html")
        assert ui_client.get("/nope.js").status_code == 404
        # API routes still win over the static mount.
        assert ui_client.get("/api/health").status_code == 200


def test_cors_for_local_origins(client):
    response = client.options(
        "/api/subdivide",
        headers={
            "Origin": "http://localhost:5173",
            "Access-Control-Request-Method": "POST",
        },
    )
    assert response.status_code == 200
    assert response.headers["access-control-allow-origin"] == "http://localhost:5173"

    response = client.options(
        "/api/subdivide",
        headers={
            "Origin": "http://example.com",
            "Access-Control-Request-Method": "POST",
        },
    )
    assert "access-control-allow-origin" not in response.headers
