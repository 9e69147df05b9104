"""Exact rational polygon geometry: validation, cone lifts, and external vertices.

All coordinates are `fractions.Fraction`.  Vertex and edge indices in the
public API are 1-based and cyclic: edge i joins vertex i to vertex i+1, and
index d+1 wraps to 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Vec2 = tuple[Fraction, Fraction]
Vec3 = tuple[Fraction, Fraction, Fraction]


class PolygonError(ValueError):
    """Input fails to describe a usable polygon."""


class DuplicateVertex(PolygonError):
    def __init__(self, i: int, j: int):
        super().__init__(f"vertices {i} and {j} coincide")
        self.indices = (i, j)


class DegenerateEdge(PolygonError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"vertices {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class GenericityFailure(PolygonError):
    def __init__(self, triple: tuple[int, int, int], detail: str = ""):
        msg = f"edge lines {triple[0]}, {triple[1]}, {triple[2]} are concurrent"
        super().__init__(msg + (f" ({detail})" if detail else ""))
        self.indices = triple


def cross3(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot3(u: Vec3, v: Vec3) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(a: Vec3, b: Vec3, c: Vec3) -> Fraction:
    return dot3(a, cross3(b, c))


def proj_point(v: Sequence[Fraction]) -> tuple[int, int, int]:
    """Canonical integer form of a projective point: coprime entries, first
    nonzero entry positive."""
    den = 1
    for x in v:
        f = Fraction(x)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector is not a projective point")
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return (ints[0], ints[1], ints[2])


@dataclass(frozen=True)
class Polygon:
    """A validated polygon, stored counterclockwise."""

    vertices: tuple[Vec2, ...]
    convex: bool

    @property
    def d(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Vec2:
        return self.vertices[(i - 1) % self.d]


@dataclass(frozen=True)
class ConeData:
    """Lifted vertices, inward edge normals and vertex triple products.

    normal(i) is the cross product of lifted vertices i and i+1; alpha(i) is
    the determinant of lifted vertices i-1, i, i+1.
    """

    polygon: Polygon
    lifted: tuple[Vec3, ...]
    normals: tuple[Vec3, ...]
    alphas: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.lifted)

    def lifted_vertex(self, i: int) -> Vec3:
        return self.lifted[(i - 1) % self.d]

    def normal(self, i: int) -> Vec3:
        return self.normals[(i - 1) % self.d]

    def alpha(self, i: int) -> Fraction:
        return self.alphas[(i - 1) % self.d]


@dataclass(frozen=True)
class ExternalVertexSet:
    """Pairwise edge-line intersections that are not polygon vertices.

    Each entry pairs a canonicalized projective point with the 1-based index
    pair (i, j), i < j, of the two edge lines through it.
    """

    d: int
    points: tuple[tuple[tuple[int, int, int], tuple[int, int]], ...]

    def __len__(self) -> int:
        return len(self.points)

    def point_set(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(p for p, _ in self.points)


def _coerce_vertex(p) -> Vec2:
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return (Fraction(p[0]), Fraction(p[1]))
    raise PolygonError(f"vertex {p!r} is not a coordinate pair")


def validate_polygon(vertices) -> Polygon:
    """Check distinctness, orientation, edge and genericity conditions.

    The polygon is reoriented counterclockwise if needed; indices in error
    messages refer to the counterclockwise order.  Non-convex polygons are
    accepted with convex=False as long as every triple of edge lines is
    non-concurrent (concurrency at infinity, i.e. three parallel edge lines,
    counts).
    """
    pts = [_coerce_vertex(p) for p in vertices]
    d = len(pts)
    if d < 4:
        raise PolygonError(f"need at least 4 vertices, got {d}")
    seen: dict[Vec2, int] = {}
    for idx, p in enumerate(pts):
        if p in seen:
            raise DuplicateVertex(seen[p] + 1, idx + 1)
        seen[p] = idx

    area2 = sum(
        pts[i][0] * pts[(i + 1) % d][1] - pts[(i + 1) % d][0] * pts[i][1]
        for i in range(d)
    )
    if area2 < 0:
        pts.reverse()

    crosses = []
    for i in range(d):
        a, b, c = pts[i], pts[(i + 1) % d], pts[(i + 2) % d]
        cr = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        if cr == 0:
            raise DegenerateEdge(i + 1, (i + 1) % d + 1, (i + 2) % d + 1)
        crosses.append(cr)
    convex = all(cr > 0 for cr in crosses)

    polygon = Polygon(tuple(pts), convex)
    normals = _normals(polygon)
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                if det3(normals[i], normals[j], normals[k]) == 0:
                    raise GenericityFailure((i + 1, j + 1, k + 1))
    return polygon


def _normals(polygon: Polygon) -> tuple[Vec3, ...]:
    lifted = [(x, y, Fraction(1)) for x, y in polygon.vertices]
    d = len(lifted)
    return tuple(cross3(lifted[i], lifted[(i + 1) % d]) for i in range(d))


def cone_data(polygon: Polygon) -> ConeData:
    """Lift the polygon to height one and collect normals and alphas."""
    lifted = tuple((x, y, Fraction(1)) for x, y in polygon.vertices)
    d = len(lifted)
    normals = tuple(cross3(lifted[i], lifted[(i + 1) % d]) for i in range(d))
    alphas = tuple(
        det3(lifted[(i - 1) % d], lifted[i], lifted[(i + 1) % d]) for i in range(d)
    )
    assert all(a != 0 for a in alphas)
    return ConeData(polygon, lifted, normals, alphas)


def external_vertices(cone: ConeData) -> ExternalVertexSet:
    """Intersect all pairs of edge lines and drop the polygon vertices.

    Every surviving point must lie on exactly two edge lines; a third line
    through one is a genericity failure.  The count is always d(d-3)/2.
    """
    d = cone.d
    lifted_set = {proj_point(v) for v in cone.lifted}
    found: list[tuple[tuple[int, int, int], tuple[int, int]]] = []
    for i in range(d):
        for j in range(i + 1, d):
            p = cross3(cone.normals[i], cone.normals[j])
            if p == (0, 0, 0):
                raise GenericityFailure((i + 1, j + 1, j + 1), "coincident edge lines")
            cp = proj_point(p)
            if cp in lifted_set:
                continue
            on_lines = [k + 1 for k in range(d) if dot3(cone.normals[k], p) == 0]
            if len(on_lines) != 2:
                raise GenericityFailure(
                    tuple(on_lines[:3]), f"external point {cp} lies on {len(on_lines)} lines"
                )
            found.append((cp, (i + 1, j + 1)))
    expected = d * (d - 3) // 2
    if len(found) != expected:
        raise GenericityFailure((0, 0, 0), f"expected {expected} external vertices, found {len(found)}")
    return ExternalVertexSet(d, tuple(found))


def polygon_to_json(polygon: Polygon) -> dict:
    return {"vertices": [[str(x), str(y)] for x, y in polygon.vertices]}


def polygon_from_json(data) -> Polygon:
    """Parse {"vertices": [["0","0"], ["1/2","0"], ...]} and validate."""
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonError('polygon JSON must be an object with a "vertices" key')
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise PolygonError('"vertices" must be a list of coordinate pairs')
    verts = []
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise PolygonError(f"bad vertex entry {entry!r}")
        try:
            verts.append((Fraction(str(entry[0])), Fraction(str(entry[1]))))
        except (ValueError, ZeroDivisionError) as exc:
            raise PolygonError(f"bad coordinate in {entry!r}: {exc}") from exc
    return validate_polygon(verts)


def regular_polygon_approx(d: int, max_denominator: int = 10**6) -> Polygon:
    """Bounded-denominator rational approximation of the regular d-gon."""
    verts = []
    for k in range(d):
        theta = 2 * math.pi * k / d
        verts.append(
            (
                Fraction(math.cos(theta)).limit_denominator(max_denominator),
                Fraction(math.sin(theta)).limit_denominator(max_denominator),
            )
        )
    return validate_polygon(verts)


def random_convex_polygon(d: int, seed: int, scale: int = 1000) -> Polygon:
    """Seeded random convex generic polygon from integer circle points.

    Circle points at random well-separated angles are approximated on the
    integer lattice of radius `scale` (the denominator-`scale` rational
    approximation, cleared of its denominator).  Integer vertices keep every
    downstream exact computation fast; resampling enforces genericity.
    """
    rng = random.Random(seed)
    min_gap = 0.8 / d
    for _ in range(200):
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(d))
        gaps = [angles[(i + 1) % d] - angles[i] for i in range(d - 1)]
        gaps.append(2 * math.pi - angles[-1] + angles[0])
        if min(gaps) < min_gap:
            continue
        verts = [
            (
                Fraction(round(scale * math.cos(a))),
                Fraction(round(scale * math.sin(a))),
            )
            for a in angles
        ]
        try:
            polygon = validate_polygon(verts)
        except PolygonError:
            continue
        if polygon.convex:
            return polygon
    raise PolygonError(f"could not sample a generic convex {d}-gon from seed {seed}")
