"""Dense exact linear algebra over Fraction: rref, rank, kernels.

Elimination is done fraction-free on primitive integer rows (clear
denominators, divide by content after every update).  Naive Fraction
elimination lets entry bit-sizes explode on matrices with large rational
entries; content-reduced integer elimination keeps entries near the size of
the matrix minors, which is what makes exact kernels of large pullback
matrices tractable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Matrix = list[list[Fraction]]


def _primitive(row: list) -> list[int]:
    """Scale a rational row to coprime integers (zero rows stay zero)."""
    denoms = [x.denominator for x in row if x]
    if not denoms:
        return [0] * len(row)
    scale = lcm(*denoms)
    ints = [int(x * scale) for x in row]
    g = gcd(*ints)
    return [x // g for x in ints]


def _echelon(rows: Matrix) -> tuple[list[list[int]], list[int]]:
    """Forward elimination to integer row echelon form with pivot columns.

    Pivoting is deterministic: among rows with a nonzero entry in the current
    column, the one whose largest entry has the fewest bits (ties broken by
    row index); small pivots slow the growth of minors.  Each updated row is
    divided by its content so entries stay small.
    """
    m = [_primitive(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        candidates = [
            (max(abs(x).bit_length() for x in m[i]), i)
            for i in range(r, len(m))
            if m[i][c] != 0
        ]
        if not candidates:
            continue
        pivot_row = min(candidates)[1]
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                updated = [p * a - f * b for a, b in zip(m[i], m[r])]
                g = gcd(*updated)
                m[i] = [x // g for x in updated] if g else updated
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with the pivot column list."""
    echelon, pivots = _echelon(rows)
    reduced: Matrix = [[Fraction(x) for x in row] for row in echelon]
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        inv = Fraction(1) / reduced[r][pc]
        reduced[r] = [x * inv for x in reduced[r]]
        for i in range(r):
            f = reduced[i][pc]
            if f:
                reduced[i] = [a - f * b for a, b in zip(reduced[i], reduced[r])]
    reduced.extend(
        [Fraction(0)] * (len(rows[0]) if rows else 0)
        for _ in range(len(rows) - len(reduced))
    )
    return reduced, pivots


def rank(rows: Matrix) -> int:
    return len(_echelon(rows)[1])


def kernel_basis(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    if not rows:
        return [
            [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis
