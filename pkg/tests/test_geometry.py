"""Polygon validation, cone data, and external vertices.

The unit-square values (normals, alphas, external vertices) were computed by
hand from the cross-product definitions and are frozen here as oracles.
"""

from fractions import Fraction

import pytest

from wachspress import (
    DegenerateEdge,
    DuplicateVertex,
    GenericityFailure,
    PolygonError,
    cone_data,
    external_vertices,
    polygon_from_json,
    polygon_to_json,
    proj_point,
    random_convex_polygon,
    regular_polygon_approx,
    validate_polygon,
)
from conftest import HEXAGON, NONGENERIC_PENTAGON, SQUARE


def test_square_is_valid_and_convex():
    poly = validate_polygon(SQUARE)
    assert poly.d == 4
    assert poly.convex
    assert poly.vertex(1) == (0, 0)
    assert poly.vertex(3) == (1, 1)


def test_square_normals_and_alphas():
    cone = cone_data(validate_polygon(SQUARE))
    # n_i = (v_i, 1) x (v_{i+1}, 1), computed by hand for the unit square
    assert cone.normal(1) == (0, 1, 0)
    assert cone.normal(2) == (-1, 0, 1)
    assert cone.normal(3) == (0, -1, 1)
    assert cone.normal(4) == (1, 0, 0)
    assert all(cone.alpha(i) == 1 for i in range(1, 5))
    assert cone.lifted_vertex(2) == (1, 0, 1)


def test_square_external_vertices():
    cone = cone_data(validate_polygon(SQUARE))
    ys = external_vertices(cone)
    # d(d-3)/2 = 2 points: the two points at infinity of opposite edge pairs
    assert len(ys) == 2
    assert ys.point_set() == {(1, 0, 0), (0, 1, 0)}
    lines = {point: pair for point, pair in ys.points}
    assert lines[(1, 0, 0)] == (1, 3)
    assert lines[(0, 1, 0)] == (2, 4)


def test_external_vertex_count_for_larger_polygons():
    for d, expect in [(5, 5), (6, 9), (7, 14), (8, 20)]:
        from conftest import FIXTURES

        cone = cone_data(validate_polygon(FIXTURES[d]))
        assert len(external_vertices(cone)) == expect == d * (d - 3) // 2


def test_too_few_vertices():
    with pytest.raises(PolygonError):
        validate_polygon([(0, 0), (1, 0), (0, 1)])


def test_duplicate_vertex_reported_with_indices():
    with pytest.raises(DuplicateVertex) as exc:
        validate_polygon([(0, 0), (1, 0), (1, 1), (1, 0), (0, 1)])
    assert exc.value.indices == (2, 4)


def test_collinear_consecutive_vertices_rejected():
    with pytest.raises(DegenerateEdge) as exc:
        validate_polygon([(0, 0), (1, 0), (2, 0), (1, 1)])
    assert exc.value.indices == (1, 2, 3)


def test_nongeneric_pentagon_rejected():
    with pytest.raises(GenericityFailure) as exc:
        validate_polygon(NONGENERIC_PENTAGON)
    assert exc.value.indices == (1, 3, 5)


def test_three_parallel_edges_rejected():
    # Edges 1, 3, 5 of this hexagon are all horizontal, hence concurrent at
    # the point at infinity (1 : 0 : 0).
    poly = [(0, 0), (1, 0), (2, 1), (3, 1), (2, 2), (1, 2)]
    with pytest.raises(GenericityFailure) as exc:
        validate_polygon(poly)
    assert exc.value.indices == (1, 3, 5)


def test_clockwise_input_is_reoriented():
    poly = validate_polygon(list(reversed(SQUARE)))
    assert poly.convex
    # shoelace of the stored order must be positive
    verts = poly.vertices
    area2 = sum(
        verts[i][0] * verts[(i + 1) % 4][1] - verts[(i + 1) % 4][0] * verts[i][1]
        for i in range(4)
    )
    assert area2 > 0


def test_nonconvex_generic_polygon_accepted():
    poly = validate_polygon([(0, 0), (4, 0), (4, 3), (2, 1), (0, 3)])
    assert not poly.convex
    cone = cone_data(poly)
    assert all(cone.alpha(i) != 0 for i in range(1, 6))


def test_proj_point_canonical_form():
    assert proj_point((Fraction(2), Fraction(4), Fraction(6))) == (1, 2, 3)
    assert proj_point((Fraction(-2), Fraction(4), Fraction(0))) == (1, -2, 0)
    assert proj_point((Fraction(0), Fraction(-3), Fraction(-6))) == (0, 1, 2)
    assert proj_point((Fraction(1, 2), Fraction(1, 3), Fraction(0))) == (3, 2, 0)
    with pytest.raises(ValueError):
        proj_point((Fraction(0), Fraction(0), Fraction(0)))


def test_json_round_trip():
    poly = validate_polygon([(Fraction(1, 2), 0), (2, 0), (3, 2), (1, 3), (-1, 1)])
    data = polygon_to_json(poly)
    assert data["vertices"][0] == ["1/2", "0"]
    back = polygon_from_json(data)
    assert back.vertices == poly.vertices


def test_json_rejects_garbage():
    with pytest.raises(PolygonError):
        polygon_from_json({"vertices": [["a", "b"], ["c", "d"]]})
    with pytest.raises(PolygonError):
        polygon_from_json([1, 2, 3])
    with pytest.raises(PolygonError):
        polygon_from_json({"vertices": [[1], [2], [3], [4]]})


def test_regular_approx_is_generic():
    for d in (4, 5, 6, 7, 8, 12):
        poly = regular_polygon_approx(d)
        assert poly.d == d
        assert poly.convex
        for x, y in poly.vertices:
            assert x.denominator <= 10**6 and y.denominator <= 10**6


def test_random_polygons_are_valid_and_deterministic():
    for d in (4, 5, 6, 7, 8):
        for seed in (0, 1, 2):
            poly = random_convex_polygon(d, seed)
            again = random_convex_polygon(d, seed)
            assert poly.vertices == again.vertices
            assert poly.d == d and poly.convex


def test_hexagon_alphas_positive(hexagon):
    cone = cone_data(hexagon)
    assert all(cone.alpha(i) > 0 for i in range(1, 7))
    assert HEXAGON[0] == (1, 0)
