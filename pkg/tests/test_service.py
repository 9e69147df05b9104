"""HTTP evaluation service: endpoints, validation, and error mapping."""

from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from wachspress import cone_data, eval_exact, validate_polygon
from wachspress.service import create_app
from conftest import HEXAGON

SQUARE = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health_get_and_head(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert "version" in body
    assert client.head("/v1/health").status_code == 200


def test_unknown_route_is_404_with_error_body(client):
    response = client.get("/v1/unknown")
    assert response.status_code == 404
    assert set(response.json()) == {"error"}


def test_coordinates_square_center(client):
    response = client.post(
        "/v1/coordinates", json={"polygon": SQUARE, "points": [[0.5, 0.5]]}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["coords"][0] == pytest.approx([0.25, 0.25, 0.25, 0.25])
    assert body["warnings"] == [None]
    assert body["polygon_warning"] is None


def test_coordinates_square_corner_is_basis_vector(client):
    response = client.post(
        "/v1/coordinates", json={"polygon": SQUARE, "points": [[0.0, 0.0]]}
    )
    assert response.json()["coords"][0] == pytest.approx([1.0, 0.0, 0.0, 0.0])


def test_coordinates_rows_sum_to_one(client):
    hexagon = [[float(x), float(y)] for x, y in HEXAGON]
    points = [[1.5, 1.0], [2.0, 1.2], [1.2, 0.4]]
    response = client.post(
        "/v1/coordinates", json={"polygon": hexagon, "points": points}
    )
    assert response.status_code == 200
    for row in response.json()["coords"]:
        assert len(row) == 6
        assert sum(row) == pytest.approx(1.0, abs=1e-9)
        assert all(v >= 0 for v in row)


def test_coordinates_match_exact_rational_values(client):
    poly = validate_polygon([(0, 0), (2, 0), (3, 2), (1, 3), (-1, 1)])
    cone = cone_data(poly)
    pts = [(Fraction(1), Fraction(1)), (Fraction(3, 2), Fraction(1, 2))]
    response = client.post(
        "/v1/coordinates",
        json={
            "polygon": [[float(x), float(y)] for x, y in poly.vertices],
            "points": [[float(px), float(py)] for px, py in pts],
        },
    )
    rows = response.json()["coords"]
    for row, p in zip(rows, pts):
        exact = eval_exact(cone, p)
        assert max(abs(float(a) - b) for a, b in zip(exact, row)) < 1e-10


def test_malformed_json_is_400(client):
    response = client.post(
        "/v1/coordinates",
        content=b"{oops",
        headers={"content-type": "application/json"},
    )
    assert response.status_code == 400
    assert response.json() == {"error": "malformed JSON body"}


def test_missing_field_is_422(client):
    response = client.post("/v1/coordinates", json={"points": [[0.5, 0.5]]})
    assert response.status_code == 422
    assert "polygon" in response.json()["error"]


def test_repeated_vertices_is_422(client):
    response = client.post(
        "/v1/coordinates",
        json={
            "polygon": [[0, 0], [0, 0], [1, 1], [0, 1]],
            "points": [[0.5, 0.5]],
        },
    )
    assert response.status_code == 422
    assert "coincide" in response.json()["error"]


def test_too_few_vertices_is_422(client):
    response = client.post(
        "/v1/coordinates", json={"polygon": [[0, 0], [1, 0]], "points": [[0.5, 0.5]]}
    )
    assert response.status_code == 422


def test_nonfinite_numbers_rejected(client):
    response = client.post(
        "/v1/coordinates",
        content='{"polygon": [[0,0],[1,0],[1,1],[0,1]], "points": [[NaN, 0.5]]}',
        headers={"content-type": "application/json"},
    )
    assert response.status_code in (400, 422)


def test_nonconvex_polygon_warns_but_answers(client):
    arrow = [[0.0, 0.0], [4.0, 0.0], [4.0, 3.0], [2.0, 1.0], [0.0, 3.0]]
    response = client.post(
        "/v1/coordinates", json={"polygon": arrow, "points": [[2.0, 0.5]]}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["polygon_warning"] == "non-convex polygon"
    assert sum(body["coords"][0]) == pytest.approx(1.0, abs=1e-9)


def test_deform_identity(client):
    points = [[0.5, 0.5], [0.25, 0.75]]
    response = client.post(
        "/v1/deform", json={"source": SQUARE, "target": SQUARE, "points": points}
    )
    assert response.status_code == 200
    for p, q in zip(points, response.json()["points"]):
        assert q == pytest.approx(p, abs=1e-12)


def test_deform_translation(client):
    target = [[x + 2.0, y - 1.0] for x, y in SQUARE]
    points = [[0.5, 0.5], [0.1, 0.9]]
    response = client.post(
        "/v1/deform", json={"source": SQUARE, "target": target, "points": points}
    )
    for p, q in zip(points, response.json()["points"]):
        assert q == pytest.approx([p[0] + 2.0, p[1] - 1.0], abs=1e-12)


def test_deform_square_to_rectangle_center(client):
    target = [[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [0.0, 1.0]]
    response = client.post(
        "/v1/deform",
        json={"source": SQUARE, "target": target, "points": [[0.5, 0.5]]},
    )
    assert response.json()["points"][0] == pytest.approx([1.0, 0.5], abs=1e-12)


def test_deform_length_mismatch_is_422(client):
    response = client.post(
        "/v1/deform",
        json={"source": SQUARE, "target": SQUARE[:3], "points": [[0.5, 0.5]]},
    )
    assert response.status_code == 422
    assert "target" in response.json()["error"]


def test_service_is_stateless(client):
    payload = {"polygon": SQUARE, "points": [[0.3, 0.7]]}
    first = client.post("/v1/coordinates", json=payload).json()
    for _ in range(3):
        assert client.post("/v1/coordinates", json=payload).json() == first
