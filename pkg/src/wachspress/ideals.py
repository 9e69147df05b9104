"""Defining ideal of the coordinate image surface for a generic polygon.

The ambient ring has one variable per vertex.  tau collects the three linear
forms sum x_i * lifted_i; each Lambda_k pairs consecutive normals against the
variables x_k, x_k+1 with denominators cleared by alpha factors.  Dotting
Lambda_k with tau gives quadrics supported on non-adjacent variable pairs,
and 3x3 determinants of Lambda rows give cubics.  Together they generate the
ideal certified by the Groebner and Hilbert checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .coordinates import Numerators, numerators, pullback
from .geometry import ConeData
from .polyring import (
    Exponent,
    Poly,
    PolyRing,
    ambient_ring,
    graded_kernel,
)


class LeadTermFailure(ValueError):
    """Quadric reduction cannot realize the expected lead terms."""


@dataclass(frozen=True)
class Tau:
    """The three linear forms whose vanishing cuts out the center."""

    ring: PolyRing
    components: tuple[Poly, Poly, Poly]

    def dot(self, triple) -> Poly:
        out = self.ring.zero()
        for f, g in zip(triple, self.components):
            out = out + f * g
        return out


def tau(cone: ConeData, ring: PolyRing | None = None) -> Tau:
    ring = ring or ambient_ring(cone.d)
    comps = []
    for c in range(3):
        f = ring.zero()
        for i in range(cone.d):
            f = f + ring.gen(i) * cone.lifted[i][c]
        comps.append(f)
    return Tau(ring, tuple(comps))


def lambda_vectors(
    cone: ConeData, ring: PolyRing | None = None
) -> list[tuple[Poly, Poly, Poly]]:
    """Cleared row vectors alpha_k x_{k+1} n_{k+1} - alpha_{k+1} x_k n_{k-1}.

    Entry k (1-based) uses cyclic neighbor indices; each component is a
    linear form in x_k and x_{k+1} only.
    """
    ring = ring or ambient_ring(cone.d)
    d = cone.d
    rows = []
    for k in range(1, d + 1):
        xk = ring.gen((k - 1) % d)
        xk1 = ring.gen(k % d)
        n_next = cone.normal(k + 1)
        n_prev = cone.normal(k - 1)
        a_k = cone.alpha(k)
        a_k1 = cone.alpha(k + 1)
        rows.append(
            tuple(
                xk1 * (a_k * n_next[c]) - xk * (a_k1 * n_prev[c]) for c in range(3)
            )
        )
    return rows


def quadrics(cone: ConeData, ring: PolyRing | None = None) -> list[Poly]:
    """All d quadrics Lambda_k . tau, k = 1..d."""
    ring = ring or ambient_ring(cone.d)
    t = tau(cone, ring)
    return [t.dot(row) for row in lambda_vectors(cone, ring)]


def quadric_basis(cone: ConeData, ring: PolyRing | None = None) -> list[Poly]:
    """Reduce quadrics 2..d-2 to a basis with lead terms x1*x3, ..., x1*x_{d-1}.

    Quadric k has x1-support only on x1*x_k and x1*x_{k+1}, so eliminating
    with the previously reduced entries is a single sweep.
    """
    ring = ring or ambient_ring(cone.d)
    d = cone.d
    qs = quadrics(cone, ring)
    basis: list[Poly] = []
    for k in range(2, d - 1):
        q = qs[k - 1]
        for prev in basis:
            lead_exp, lead_coeff = prev.lead_term()
            c = q.terms.get(lead_exp)
            if c:
                q = q - prev * (c / lead_coeff)
        expected = [0] * d
        expected[0] = 1
        expected[k] = 1
        lead = tuple(expected)
        if q.terms.get(lead, Fraction(0)) == 0:
            raise LeadTermFailure(f"quadric {k} lost its x1*x{k + 1} term")
        if q.lead_monomial() != lead:
            raise LeadTermFailure(f"quadric {k} has unexpected lead {q.lead_monomial()}")
        basis.append(q.normalized())
    return basis


def cubics(cone: ConeData, ring: PolyRing | None = None) -> dict[tuple[int, int, int], Poly]:
    """Determinants of Lambda row triples, keyed by 1-based index triples."""
    ring = ring or ambient_ring(cone.d)
    rows = lambda_vectors(cone, ring)
    out = {}
    for i, j, k in combinations(range(1, cone.d + 1), 3):
        a, b, c = rows[i - 1], rows[j - 1], rows[k - 1]
        det = (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
        out[(i, j, k)] = det.normalized() if det else det
    return out


def diagonal_monomials(d: int) -> list[Exponent]:
    """Exponents x_i x_j over non-adjacent cyclic pairs; d(d-3)/2 of them."""
    out = []
    for i, j in combinations(range(1, d + 1), 2):
        if j == i + 1 or (i == 1 and j == d):
            continue
        exp = [0] * d
        exp[i - 1] += 1
        exp[j - 1] += 1
        out.append(tuple(exp))
    return out


def diagonal_support_check(polys, d: int) -> bool:
    allowed = set(diagonal_monomials(d))
    return all(set(p.terms) <= allowed for p in polys)


@dataclass(frozen=True)
class WachspressIdeal:
    """Generators of the image ideal: a quadric basis plus essential cubics.

    Cubics whose degree-3 span is already covered by ring-multiples of the
    quadrics are quarantined in redundant_triples rather than dropped.
    """

    ring: PolyRing
    d: int
    quadrics_full: tuple[Poly, ...]
    quadric_basis: tuple[Poly, ...]
    cubics: dict[tuple[int, int, int], Poly]
    essential_cubics: tuple[tuple[tuple[int, int, int], Poly], ...]
    redundant_triples: tuple[tuple[int, int, int], ...]

    @property
    def generators(self) -> list[Poly]:
        return list(self.quadric_basis) + [p for _, p in self.essential_cubics]


def _degree3_monomials(ring: PolyRing) -> list[Exponent]:
    n = ring.nvars
    out = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                exp = [0] * n
                exp[i] += 1
                exp[j] += 1
                exp[k] += 1
                out.append(tuple(exp))
    return out


class _SpanTracker:
    """Incremental row reduction over a fixed monomial basis."""

    def __init__(self, monomials: list[Exponent]):
        self.index = {m: i for i, m in enumerate(monomials)}
        self.width = len(monomials)
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        for row, piv in zip(self.rows, self.pivots):
            if vec[piv] != 0:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def add(self, poly: Poly) -> bool:
        """Insert the polynomial; True if it enlarged the span."""
        vec = [Fraction(0)] * self.width
        for e, c in poly.terms.items():
            vec[self.index[e]] = c
        vec = self._reduce(vec)
        for i, v in enumerate(vec):
            if v != 0:
                inv = Fraction(1) / v
                self.rows.append([x * inv for x in vec])
                self.pivots.append(i)
                return True
        return False


def build_ideal(cone: ConeData, ring: PolyRing | None = None) -> WachspressIdeal:
    """Assemble the generator list, splitting cubics into essential/redundant.

    A cubic is essential when it is independent of variable multiples of the
    quadric basis and the cubics accepted before it (triples scanned in
    lexicographic order).
    """
    ring = ring or ambient_ring(cone.d)
    qs = quadrics(cone, ring)
    qb = quadric_basis(cone, ring)
    cbs = cubics(cone, ring)
    tracker = _SpanTracker(_degree3_monomials(ring))
    for q in qb:
        for i in range(ring.nvars):
            tracker.add(q * ring.gen(i))
    essential = []
    redundant = []
    for triple in sorted(cbs):
        w = cbs[triple]
        if w and tracker.add(w):
            essential.append((triple, w))
        else:
            redundant.append(triple)
    return WachspressIdeal(
        ring,
        cone.d,
        tuple(q.normalized() for q in qs),
        tuple(qb),
        cbs,
        tuple(essential),
        tuple(redundant),
    )


def image_ideal_oracle(
    cone: ConeData,
    degree: int,
    ring: PolyRing | None = None,
    nums: Numerators | None = None,
) -> list[Poly]:
    """Degree-m forms vanishing on the coordinate image, by direct kernel.

    Substitutes the numerators into every degree-m monomial and returns a
    basis of the linear relations.  Independent of the Lambda construction;
    practical for m <= 4.
    """
    ring = ring or ambient_ring(cone.d)
    nums = nums or numerators(cone)
    monomials = sorted(
        _degree_monomials_of(ring.nvars, degree), key=ring.order.key, reverse=True
    )
    images = [pullback(ring.monomial(m), nums) for m in monomials]
    kernel = graded_kernel(images, monomials)
    out = []
    for vec in kernel:
        f = ring.zero()
        for m, c in zip(monomials, vec):
            if c:
                f = f + ring.monomial(m, c)
        out.append(f.normalized())
    return out


def _degree_monomials_of(nvars: int, t: int):
    if nvars == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in _degree_monomials_of(nvars - 1, t - first):
            yield (first,) + rest


def linear_syzygy_dimension(polys: list[Poly], ring: PolyRing) -> int:
    """Dimension of linear-coefficient relations sum c_i(x) * p_i = 0."""
    if not polys:
        return 0
    images = []
    source = []
    for idx, p in enumerate(polys):
        for v in range(ring.nvars):
            images.append(p * ring.gen(v))
            source.append((idx, v))
    return len(graded_kernel(images, source))


def center_basis(cone: ConeData) -> list[list[Fraction]]:
    """Kernel of the 3 x d lifted-vertex matrix: points of the center."""
    matrix = [[cone.lifted[i][c] for i in range(cone.d)] for c in range(3)]
    return linalg.kernel_basis(matrix, cone.d)


def pairing_matrix_rank(cone: ConeData) -> tuple[int, int]:
    """Rank of the 2d x 3d constraint system for diagonal quadrics in the
    center ideal, with the derived solution-space dimension 3d - rank.

    Row block one forces u_i . lifted_i = 0; block two forces the symmetric
    sums u_i . lifted_{i+1} + u_{i+1} . lifted_i = 0.
    """
    d = cone.d
    rows = []
    for i in range(d):
        row = [Fraction(0)] * (3 * d)
        for c in range(3):
            row[3 * i + c] = cone.lifted[i][c]
        rows.append(row)
    for i in range(d):
        j = (i + 1) % d
        row = [Fraction(0)] * (3 * d)
        for c in range(3):
            row[3 * i + c] += cone.lifted[j][c]
            row[3 * j + c] += cone.lifted[i][c]
        rows.append(row)
    r = linalg.rank(rows)
    return r, 3 * d - r


def lambda_rank(cone: ConeData, ring: PolyRing | None = None) -> int:
    """Rank of the d Lambda rows as vectors of linear-form coefficients."""
    ring = ring or ambient_ring(cone.d)
    rows = []
    for row in lambda_vectors(cone, ring):
        flat: list[Fraction] = []
        for comp in row:
            for v in range(ring.nvars):
                exp = [0] * ring.nvars
                exp[v] = 1
                flat.append(comp.terms.get(tuple(exp), Fraction(0)))
        rows.append(flat)
    return linalg.rank(rows)
