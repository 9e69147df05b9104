"""Squarefree combinatorics behind the initial ideal: the graph complex, its
Stanley-Reisner ideal, closed-form Hilbert data, and betti tables.

The graph for d vertices lives on variables 1..d-1: a complete graph on
2..d-1 plus the edge {1,2}; variable d stays free.  Its Stanley-Reisner
ideal matches the computed initial ideal, and its Hilbert series is
(1 + (d-3)t + C(d-3,2)t^2)/(1-t)^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg
from .polyring import MonomialIdeal


class NegativeBetti(ValueError):
    """The closed-form betti value came out negative."""


class DimensionTooLarge(ValueError):
    """Homology is only implemented through dimension 2."""


class SimplicialComplex:
    """Finite simplicial complex with integer vertex labels."""

    def __init__(self, vertices, facets):
        self.vertices = tuple(sorted(set(vertices)))
        vset = set(self.vertices)
        self.facets = tuple(sorted(frozenset(f) for f in facets))
        for f in self.facets:
            if not f <= vset:
                raise ValueError(f"facet {set(f)} uses unknown vertices")
        faces = {frozenset()}
        for f in self.facets:
            members = sorted(f)
            for r in range(1, len(members) + 1):
                for sub in combinations(members, r):
                    faces.add(frozenset(sub))
        for v in self.vertices:
            faces.add(frozenset([v]))
        self.faces = frozenset(faces)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, k: int) -> list[tuple]:
        return sorted(tuple(sorted(f)) for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) with f_-1 = 1 for the empty face."""
        return tuple(len(self.faces_of_dim(k)) for k in range(-1, self.dim + 1))

    def h_vector(self) -> tuple[int, ...]:
        """Coefficients of f(t-1) where f(t) = sum f_{i-1} t^{n-i}."""
        f = self.f_vector()
        n = self.dim + 1
        out = [0] * (n + 1)
        for i, fi in enumerate(f):
            # expand f_{i-1} (t-1)^{n-i}
            m = n - i
            for k in range(m + 1):
                out[n - (m - k)] += fi * comb(m, k) * (-1) ** k
        return tuple(out)

    def restrict(self, subset) -> "SimplicialComplex":
        """Induced subcomplex: every face contained in the vertex subset."""
        w = set(subset) & set(self.vertices)
        kept = [f for f in self.faces if f and f <= w]
        return SimplicialComplex(w, kept)

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


def complete_graph(n: int, labels=None) -> SimplicialComplex:
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    return SimplicialComplex(labels, combinations(labels, 2))


def gamma_complex(d: int) -> SimplicialComplex:
    """Graph on 1..d-1: complete on 2..d-1 plus the edge {1, 2}."""
    if d < 4:
        raise ValueError("need d >= 4")
    edges = list(combinations(range(2, d), 2))
    edges.append((1, 2))
    return SimplicialComplex(range(1, d), edges)


def stanley_reisner(d: int) -> MonomialIdeal:
    """Minimal non-faces of the graph complex, as an ideal in d variables."""
    if d < 4:
        raise ValueError("need d >= 4")
    gens = []
    for j in range(3, d):
        exp = [0] * d
        exp[0] = 1
        exp[j - 1] = 1
        gens.append(tuple(exp))
    for a, b, c in combinations(range(2, d), 3):
        exp = [0] * d
        exp[a - 1] = 1
        exp[b - 1] = 1
        exp[c - 1] = 1
        gens.append(tuple(exp))
    return MonomialIdeal(d, gens)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1-t)^denominator_exponent with integer numerator."""

    numerator: tuple[int, ...]
    denominator_exponent: int

    def coefficient(self, q: int) -> int:
        if q < 0:
            return 0
        e = self.denominator_exponent
        total = 0
        for k, c in enumerate(self.numerator):
            if q >= k:
                total += c * comb(q - k + e - 1, e - 1)
        return total

    def __str__(self):
        parts = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}t" if c != 1 else "t")
            else:
                parts.append(f"{c}t^{k}" if c != 1 else f"t^{k}")
        num = " + ".join(parts) if parts else "0"
        return f"({num})/(1-t)^{self.denominator_exponent}"


def hilbert_series_formula(d: int) -> HilbertSeries:
    if d < 4:
        raise ValueError("need d >= 4")
    return HilbertSeries((1, d - 3, comb(d - 3, 2)), 3)


@dataclass(frozen=True)
class HilbertPolynomial:
    """Exact quadratic a2 t^2 + a1 t + a0 over Fraction."""

    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return self.a2 * t * t + self.a1 * t + self.a0

    def __str__(self):
        return f"({self.a2})t^2 + ({self.a1})t + ({self.a0})"


def hilbert_polynomial_formula(d: int) -> HilbertPolynomial:
    if d < 4:
        raise ValueError("need d >= 4")
    return HilbertPolynomial(
        Fraction(d * d - 5 * d + 8, 4), Fraction(-(d * d - 9 * d + 12), 4), Fraction(1)
    )


class BettiTable:
    """Graded betti numbers keyed by (homological degree, internal degree)."""

    def __init__(self, entries: dict[tuple[int, int], int]):
        self.entries = {k: v for k, v in entries.items() if v != 0}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise NegativeBetti(f"b_{i},{j} = {v}")

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def max_column(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_row(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def totals(self) -> list[int]:
        out = [0] * (self.max_column + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def row(self, r: int) -> list[int]:
        return [self.entry(i, i + r) for i in range(self.max_column + 1)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def dominates(self, other: "BettiTable") -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(self.entry(*k) >= other.entry(*k) for k in keys)

    def to_json(self) -> dict:
        return {
            "totals": self.totals(),
            "rows": {str(r): self.row(r) for r in range(self.max_row + 1)},
        }

    def __repr__(self):
        return f"BettiTable({self.entries})"


def betti_formula(d: int) -> BettiTable:
    """Closed-form betti table of the coordinate ring for a d-gon.

    One generator in degree 0, d-3 quadrics, and for column i >= 1 beyond
    the quadrics the internal-degree i+2 entry
    C(d-3, i+2) - (d-3) C(d-3, i+1) + C(d-3, 2) C(d-3, i).
    """
    if d < 4:
        raise ValueError("need d >= 4")
    entries = {(0, 0): 1, (1, 2): d - 3}
    m = d - 3
    for j in range(3, d + 2):
        val = comb(m, j) - m * comb(m, j - 1) + comb(m, 2) * comb(m, j - 2)
        if val < 0:
            raise NegativeBetti(f"b_{j - 2},{j} = {val}")
        if val:
            entries[(j - 2, j)] = val
    return BettiTable(entries)


def _boundary_rank(lower: list[tuple], upper: list[tuple]) -> int:
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for face in upper:
        row = [Fraction(0)] * len(lower)
        for k in range(len(face)):
            sub = face[:k] + face[k + 1 :]
            row[index[sub]] += (-1) ** k
        rows.append(row)
    return linalg.rank(rows)


def reduced_homology_dims(cx: SimplicialComplex) -> tuple[int, int, int, int]:
    """Reduced rational homology in dimensions -1, 0, 1, 2."""
    if cx.dim > 2:
        raise DimensionTooLarge(f"complex has dimension {cx.dim}")
    verts = cx.faces_of_dim(0)
    edges = cx.faces_of_dim(1)
    tris = cx.faces_of_dim(2)
    rank0 = 1 if verts else 0  # augmentation C_0 -> C_-1
    rank1 = _boundary_rank(verts, edges)
    rank2 = _boundary_rank(edges, tris)
    h_neg1 = 1 - rank0
    h0 = len(verts) - rank0 - rank1
    h1 = len(edges) - rank1 - rank2
    h2 = len(tris) - rank2
    return h_neg1, h0, h1, h2


def hochster_betti(cx: SimplicialComplex, nvars: int) -> BettiTable:
    """Betti table of the Stanley-Reisner quotient by subset homology sums.

    b_{i,j} sums dim H~_{j-i-1} of induced subcomplexes on j vertices.
    Variables beyond the complex's vertex set are free: subsets touching
    them contribute nothing, so only subsets of actual vertices are scanned.
    """
    if cx.dim > 2:
        raise DimensionTooLarge(f"complex has dimension {cx.dim}")
    if len(cx.vertices) > nvars:
        raise ValueError("complex has more vertices than variables")
    entries: dict[tuple[int, int], int] = {}
    for size in range(len(cx.vertices) + 1):
        for subset in combinations(cx.vertices, size):
            dims = reduced_homology_dims(cx.restrict(subset))
            for r, h in zip((-1, 0, 1, 2), dims):
                if h:
                    i = size - 1 - r
                    entries[(i, size)] = entries.get((i, size), 0) + h
    return BettiTable(entries)


def render_betti(table: BettiTable) -> str:
    """Fixed-width text table: totals line, then one line per row index,
    with "-" marking zero entries."""
    ncols = table.max_column + 1
    totals = table.totals()
    rows = [(str(r), table.row(r)) for r in range(table.max_row + 1)]
    cells = [["total:"] + [str(v) for v in totals]]
    for label, vals in rows:
        cells.append([f"{label}:"] + [str(v) if v else "-" for v in vals])
    widths = [max(len(line[c]) for line in cells) for c in range(ncols + 1)]
    lines = [
        " ".join(cell.rjust(widths[c]) for c, cell in enumerate(line))
        for line in cells
    ]
    return "\n".join(lines)
