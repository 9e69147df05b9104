"""Wachspress coordinates of a generic polygon, exact and floating point.

The numerator of the i-th coordinate is alpha_i times the product of all edge
forms except the two edges meeting vertex i; dividing by the sum gives the
barycentric functions.  The sum of numerators is a scalar multiple of z times
the adjoint of the dual cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import ConeData, Polygon, Vec3, det3
from .polyring import Poly, PolyRing, plane_ring


class DegenerateSimplex(ValueError):
    """A triangulation triple spans zero volume."""


class DenominatorNearZero(ArithmeticError):
    """The coordinate denominator vanishes at the requested point."""


class AdjointMismatch(ValueError):
    """The numerator sum is not a z-multiple of the dual-cone adjoint."""


@dataclass(frozen=True)
class EdgeForms:
    """Linear forms of the edge lines: form i is normal(i) . (x, y, z)."""

    ring: PolyRing
    forms: tuple[Poly, ...]

    @property
    def d(self) -> int:
        return len(self.forms)

    def form(self, i: int) -> Poly:
        return self.forms[(i - 1) % self.d]


class Numerators:
    """Coordinate numerators b_1..b_d and the full edge-form product."""

    def __init__(self, ring: PolyRing, b: tuple[Poly, ...], product: Poly):
        self.ring = ring
        self.b = b
        self.product = product
        self._monomial_cache: dict[tuple[int, ...], Poly] = {}

    @property
    def d(self) -> int:
        return len(self.b)

    def numerator(self, i: int) -> Poly:
        return self.b[(i - 1) % self.d]

    def total(self) -> Poly:
        out = self.ring.zero()
        for f in self.b:
            out = out + f
        return out

    def monomial_pullback(self, exp: tuple[int, ...]) -> Poly:
        """Product of b_i^exp[i], memoized over sub-monomials."""
        cached = self._monomial_cache.get(exp)
        if cached is not None:
            return cached
        total = sum(exp)
        if total == 0:
            result = self.ring.const(1)
        else:
            i = next(k for k, p in enumerate(exp) if p > 0)
            rest = list(exp)
            rest[i] -= 1
            result = self.monomial_pullback(tuple(rest)) * self.b[i]
        self._monomial_cache[exp] = result
        return result


def edge_forms(cone: ConeData, ring: PolyRing | None = None) -> EdgeForms:
    ring = ring or plane_ring()
    x, y, z = ring.gens()
    forms = tuple(n[0] * x + n[1] * y + n[2] * z for n in cone.normals)
    return EdgeForms(ring, forms)


def numerators(cone: ConeData, ring: PolyRing | None = None) -> Numerators:
    """b_i = alpha_i * product of edge forms away from vertex i."""
    ef = edge_forms(cone, ring)
    ring = ef.ring
    d = cone.d
    b = []
    for i in range(1, d + 1):
        skip = {(i - 2) % d, (i - 1) % d}
        f = ring.const(cone.alpha(i))
        for j in range(d):
            if j not in skip:
                f = f * ef.forms[j]
        b.append(f)
    product = ring.const(1)
    for f in ef.forms:
        product = product * f
    return Numerators(ring, tuple(b), product)


@dataclass(frozen=True)
class Triangulation:
    """Index triples (0-based) into a ray list; len(triples) = len(rays) - 2."""

    size: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.triples) != self.size - 2:
            raise ValueError("a triangulation of m rays needs m - 2 triples")


def fan_triangulation(size: int, apex: int = 0) -> Triangulation:
    triples = tuple(
        (apex, (apex + i) % size, (apex + i + 1) % size) for i in range(1, size - 1)
    )
    return Triangulation(size, triples)


def snake_triangulation(size: int) -> Triangulation:
    """Zigzag order 0, 1, m-1, 2, m-2, ... taken as consecutive triples."""
    seq = []
    lo, hi = 0, size
    toggle = True
    while len(seq) < size:
        if toggle:
            seq.append(lo)
            lo += 1
        else:
            hi -= 1
            seq.append(hi)
        toggle = not toggle
    triples = tuple(tuple(sorted(seq[i : i + 3])) for i in range(size - 2))
    return Triangulation(size, triples)


def adjoint(
    rays: Sequence[Vec3], triangulation: Triangulation, ring: PolyRing | None = None
) -> Poly:
    """Sum over triangles of |r_i r_j r_k| times the ray forms off the triangle.

    Independent of the triangulation; degree is len(rays) - 3.
    """
    ring = ring or plane_ring()
    if triangulation.size != len(rays):
        raise ValueError("triangulation size does not match ray count")
    x, y, z = ring.gens()
    forms = [r[0] * x + r[1] * y + r[2] * z for r in rays]
    out = ring.zero()
    for (i, j, k) in triangulation.triples:
        vol = det3(rays[i], rays[j], rays[k])
        if vol == 0:
            raise DegenerateSimplex(f"rays {i}, {j}, {k} are coplanar")
        term = ring.const(vol)
        for m in range(len(rays)):
            if m not in (i, j, k):
                term = term * forms[m]
        out = out + term
    return out


def pullback(f: Poly, nums: Numerators) -> Poly:
    """Substitute the coordinate numerators for the ambient variables."""
    if f.ring.nvars != nums.d:
        raise ValueError(f"expected {nums.d} variables, got {f.ring.nvars}")
    out = nums.ring.zero()
    for exp, c in f.terms.items():
        out = out + nums.monomial_pullback(exp) * c
    return out


def linear_precision_check(cone: ConeData, nums: Numerators) -> bool:
    """Exact identity z * sum(b_i * lifted_i) = sum(b_i) * (x, y, z).

    At height z = 1 this is barycentric linear precision; both sides are
    homogeneous of degree d - 1.
    """
    ring = nums.ring
    xyz = ring.gens()
    z = xyz[2]
    total = nums.total()
    for c in range(3):
        lhs = ring.zero()
        for i in range(cone.d):
            lhs = lhs + nums.b[i] * cone.lifted[i][c]
        if z * lhs != total * xyz[c]:
            return False
    return True


def dual_adjoint_scalar(cone: ConeData, nums: Numerators) -> Fraction:
    """Scalar lam with sum(b_i) = lam * z * adjoint(dual cone rays)."""
    ring = nums.ring
    z = ring.gens()[2]
    adj = adjoint(cone.normals, fan_triangulation(cone.d), ring)
    rhs = z * adj
    total = nums.total()
    lead_exp, lead_coeff = rhs.lead_term()
    if lead_exp not in total.terms:
        raise AdjointMismatch("numerator sum misses the adjoint lead term")
    lam = total.terms[lead_exp] / lead_coeff
    if total != rhs * lam:
        raise AdjointMismatch("numerator sum is not proportional to z * adjoint")
    return lam


def eval_exact(cone: ConeData | Polygon, point: Sequence) -> list[Fraction]:
    """Exact barycentric values at an affine rational point."""
    if isinstance(cone, Polygon):
        from .geometry import cone_data

        cone = cone_data(cone)
    px, py = Fraction(point[0]), Fraction(point[1])
    values = _numerator_values(cone, px, py, Fraction(1))
    total = sum(values)
    if total == 0:
        raise DenominatorNearZero(f"denominator vanishes at ({px}, {py})")
    return [v / total for v in values]


def _numerator_values(cone: ConeData, px, py, pz) -> list:
    d = cone.d
    ell = [n[0] * px + n[1] * py + n[2] * pz for n in cone.normals]
    out = []
    for i in range(1, d + 1):
        skip = {(i - 2) % d, (i - 1) % d}
        v = cone.alpha(i)
        for j in range(d):
            if j not in skip:
                v = v * ell[j]
        out.append(v)
    return out


class FloatCone:
    """Float normals and alphas of a polygon given with float vertices.

    Orientation is taken as given: reversing it scales every numerator by the
    same sign, so the barycentric values are unchanged and rows stay aligned
    with the caller's vertex order.
    """

    def __init__(self, vertices: Sequence[tuple[float, float]]):
        d = len(vertices)
        lifted = [(float(x), float(y), 1.0) for x, y in vertices]
        self.d = d
        self.normals = [_fcross(lifted[i], lifted[(i + 1) % d]) for i in range(d)]
        self.alphas = [
            _fdet(lifted[(i - 1) % d], lifted[i], lifted[(i + 1) % d])
            for i in range(d)
        ]

    def betas(self, point: Sequence[float]) -> list[float]:
        px, py = float(point[0]), float(point[1])
        ell = [n[0] * px + n[1] * py + n[2] for n in self.normals]
        values = []
        for i in range(self.d):
            v = self.alphas[i]
            for j in range(self.d):
                if j != (i - 1) % self.d and j != i:
                    v *= ell[j]
            values.append(v)
        total = sum(values)
        if abs(total) < 1e-300:
            raise DenominatorNearZero(f"denominator vanishes near ({px}, {py})")
        return [v / total for v in values]


def _fcross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _fdet(a, b, c):
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (
        b[0] * c[1] - b[1] * c[0]
    )


def eval_numeric(polygon: Polygon, point: Sequence[float]) -> list[float]:
    """Floating-point barycentric values at one point."""
    fc = FloatCone([(float(x), float(y)) for x, y in polygon.vertices])
    return fc.betas(point)


def beta_matrix(
    vertices: Sequence[tuple[float, float]], points: Sequence[Sequence[float]]
) -> tuple[list[list[float]], list[str | None]]:
    """Barycentric rows for many points; warnings flag degenerate denominators.

    A flagged row is zero-filled.
    """
    fc = FloatCone(vertices)
    rows: list[list[float]] = []
    warnings: list[str | None] = []
    for p in points:
        try:
            rows.append(fc.betas(p))
            warnings.append(None)
        except DenominatorNearZero:
            rows.append([0.0] * fc.d)
            warnings.append("denominator-near-zero")
    return rows, warnings


def deform(
    source: Polygon | Sequence[tuple[float, float]],
    target: Sequence[tuple[float, float]],
    points: Sequence[Sequence[float]],
) -> tuple[list[tuple[float, float]], list[str | None]]:
    """Map points by source-polygon barycentric weights against target vertices.

    Points with a vanishing denominator pass through unchanged and are
    flagged in the warning list.
    """
    if isinstance(source, Polygon):
        vertices = [(float(x), float(y)) for x, y in source.vertices]
    else:
        vertices = [(float(x), float(y)) for x, y in source]
    if len(target) != len(vertices):
        raise ValueError(
            f"target has {len(target)} vertices, source has {len(vertices)}"
        )
    rows, warnings = beta_matrix(vertices, points)
    out = []
    for p, row, warn in zip(points, rows, warnings):
        if warn is not None:
            out.append((float(p[0]), float(p[1])))
            continue
        ox = sum(b * float(t[0]) for b, t in zip(row, target))
        oy = sum(b * float(t[1]) for b, t in zip(row, target))
        out.append((ox, oy))
    return out, warnings
