"""Sparse multivariate polynomials over Fraction with graded lex orders,
normal forms, Buchberger's algorithm and graded linear algebra.

Monomials are exponent tuples keyed against an ordered variable list.  The
graded lexicographic order compares total degree first, then the exponent
tuple read through the order's variable permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from . import linalg

Exponent = tuple[int, ...]


class VarSetMismatch(ValueError):
    """Operands live in different rings."""


class DimensionMismatch(ValueError):
    """A graded linear-algebra input has inconsistent dimensions."""


class Order:
    """Graded lex order, optionally on permuted variables."""

    __slots__ = ("nvars", "perm")

    def __init__(self, nvars: int, perm: Sequence[int] | None = None):
        self.nvars = nvars
        if perm is None:
            perm = tuple(range(nvars))
        else:
            perm = tuple(perm)
            if sorted(perm) != list(range(nvars)):
                raise ValueError(f"bad permutation {perm}")
        self.perm = perm

    def key(self, exp: Exponent):
        return (sum(exp), tuple(exp[i] for i in self.perm))

    def __eq__(self, other):
        return isinstance(other, Order) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"Order(grlex, perm={self.perm})"


class PolyRing:
    """An ordered list of variable names plus a monomial order."""

    __slots__ = ("names", "order")

    def __init__(self, names: Sequence[str], order: Order | None = None):
        self.names = tuple(names)
        self.order = order if order is not None else Order(len(self.names))
        if self.order.nvars != len(self.names):
            raise VarSetMismatch("order arity does not match variable count")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def const(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def monomial(self, exp: Exponent, c=1) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Poly(self, {tuple(exp): c})

    def gen(self, i: int) -> "Poly":
        exp = [0] * self.nvars
        exp[i] = 1
        return Poly(self, {tuple(exp): Fraction(1)})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"


def plane_ring(order: Order | None = None) -> PolyRing:
    return PolyRing(("x", "y", "z"), order)


def ambient_ring(d: int, order: Order | None = None) -> PolyRing:
    return PolyRing(tuple(f"x{i}" for i in range(1, d + 1)), order)


def _exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial: dict from exponent tuple to Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise VarSetMismatch(f"{self.ring} vs {other.ring}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_add(e1, e2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.const(1)
        for _ in range(n):
            out = out * self
        return out

    def mult_term(self, exp: Exponent, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Poly(
            self.ring, {_exp_add(e, exp): v * c for e, v in self.terms.items()}
        )

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def lead_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        e = max(self.terms, key=self.ring.order.key)
        return e, self.terms[e]

    def lead_monomial(self) -> Exponent:
        return self.lead_term()[0]

    def lead_coeff(self) -> Fraction:
        return self.lead_term()[1]

    def normalized(self) -> "Poly":
        """Integer coefficients with content 1 and positive lead coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        scale = Fraction(den, num)
        if self.lead_coeff() < 0:
            scale = -scale
        return self * scale

    def evaluate(self, values: Sequence):
        total = None
        for e, c in self.terms.items():
            v = c
            for x, p in zip(values, e):
                if p:
                    v = v * x**p
            total = v if total is None else total + v
        if total is None:
            z = Fraction(0)
            if values and isinstance(values[0], float):
                z = 0.0
            return z
        return total

    def subs(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute images[i] for variable i; images share one target ring."""
        if len(images) != self.ring.nvars:
            raise DimensionMismatch(
                f"{self.ring.nvars} variables, {len(images)} images"
            )
        target = images[0].ring
        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for img, p in zip(images, e):
                if p:
                    term = term * img**p
            out = out + term
        return out

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(
            self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True
        )

    def _format_monomial(self, exp: Exponent) -> str:
        parts = []
        for name, p in zip(self.ring.names, exp):
            if p == 1:
                parts.append(name)
            elif p > 1:
                parts.append(f"{name}^{p}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (exp, c) in enumerate(self.sorted_terms()):
            mono = self._format_monomial(exp)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def normal_form(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Remainder of f under multivariate division by basis, in list order."""
    ring = f.ring
    divisors = []
    for g in basis:
        if g.ring != ring:
            raise VarSetMismatch("divisor in a different ring")
        if g:
            divisors.append((g.lead_monomial(), g.lead_coeff(), g.terms))
    okey = ring.order.key
    work = dict(f.terms)
    remainder: dict[Exponent, Fraction] = {}
    while work:
        m = max(work, key=okey)
        c = work.pop(m)
        if c == 0:
            continue
        for lead, lc, gterms in divisors:
            if _divides(lead, m):
                shift = _exp_sub(m, lead)
                ratio = c / lc
                for e, gc in gterms.items():
                    if e == lead:
                        continue
                    key = _exp_add(e, shift)
                    v = work.get(key, Fraction(0)) - ratio * gc
                    if v:
                        work[key] = v
                    elif key in work:
                        del work[key]
                break
        else:
            remainder[m] = c
    return Poly(ring, remainder)


def s_poly(f: Poly, g: Poly) -> Poly:
    ef, cf = f.lead_term()
    eg, cg = g.lead_term()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    return f.mult_term(_exp_sub(lcm, ef), Fraction(1) / cf) - g.mult_term(
        _exp_sub(lcm, eg), Fraction(1) / cg
    )


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    polys: tuple[Poly, ...]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def _display_key(ring: PolyRing):
    okey = ring.order.key

    def key(g: Poly):
        deg, lex = okey(g.lead_monomial())
        return (deg, tuple(-x for x in lex))

    return key


def buchberger(gens: Sequence[Poly]) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Pairs are processed in increasing lcm order (normal strategy); pairs with
    coprime lead terms are skipped, as are pairs covered by the chain
    criterion.  The result is the unique reduced basis: minimal lead terms,
    fully tail-reduced, integer content 1, positive lead coefficients, sorted
    by degree then lead term.
    """
    basis = [g.normalized() for g in gens if g]
    if not basis:
        raise ValueError("no nonzero generators")
    ring = basis[0].ring
    for g in basis:
        if g.ring != ring:
            raise VarSetMismatch("generators in different rings")
        if not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator {g}")
    okey = ring.order.key

    def lcm_of(i: int, j: int) -> Exponent:
        a = basis[i].lead_monomial()
        b = basis[j].lead_monomial()
        return tuple(max(x, y) for x, y in zip(a, b))

    pending: set[tuple[int, int]] = {
        (i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
    }
    done: set[tuple[int, int]] = set()
    while pending:
        i, j = min(pending, key=lambda p: (okey(lcm_of(*p)), p))
        pending.remove((i, j))
        done.add((i, j))
        lcm = lcm_of(i, j)
        ei = basis[i].lead_monomial()
        ej = basis[j].lead_monomial()
        if all(min(a, b) == 0 for a, b in zip(ei, ej)):
            continue
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if (
                pik in done
                and pjk in done
                and _divides(basis[k].lead_monomial(), lcm)
            ):
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_poly(basis[i], basis[j]), basis)
        if h:
            h = h.normalized()
            new = len(basis)
            basis.append(h)
            for k in range(new):
                pending.add((k, new))

    # minimal lead terms
    keep: list[Poly] = []
    for g in sorted(basis, key=lambda g: okey(g.lead_monomial())):
        lm = g.lead_monomial()
        if not any(_divides(h.lead_monomial(), lm) for h in keep):
            keep.append(g)
    # tail reduction against the rest
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        reduced.append(normal_form(g, others).normalized())
    reduced.sort(key=_display_key(ring))
    return GroebnerBasis(ring, tuple(reduced))


class MonomialIdeal:
    """A monomial ideal given by its minimal generating exponents."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, exponents: Iterable[Exponent]):
        self.nvars = nvars
        exps = sorted(set(tuple(e) for e in exponents), key=lambda e: (sum(e), e))
        minimal: list[Exponent] = []
        for e in exps:
            if len(e) != nvars:
                raise DimensionMismatch(f"exponent {e} has wrong arity")
            if not any(_divides(m, e) for m in minimal):
                minimal.append(e)
        self.gens = tuple(minimal)

    def contains_monomial(self, exp: Exponent) -> bool:
        return any(_divides(m, exp) for m in self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and set(self.gens) == set(other.gens)
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.gens)))

    def __len__(self):
        return len(self.gens)

    def monomial_strings(self, ring: PolyRing | None = None) -> list[str]:
        ring = ring or ambient_ring(self.nvars)
        ordered = sorted(self.gens, key=_monomial_display_key(ring))
        return [str(ring.monomial(e)) for e in ordered]

    def __repr__(self):
        return f"MonomialIdeal({', '.join(self.monomial_strings())})"


def _monomial_display_key(ring: PolyRing):
    okey = ring.order.key

    def key(e: Exponent):
        deg, lex = okey(e)
        return (deg, tuple(-x for x in lex))

    return key


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.ring.nvars, (g.lead_monomial() for g in gb.polys))


def _degree_monomials(nvars: int, t: int):
    """Yield all exponent tuples of total degree t."""
    if nvars == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in _degree_monomials(nvars - 1, t - first):
            yield (first,) + rest


def monomial_hilbert_function(ideal: MonomialIdeal, t: int) -> int:
    """Number of degree-t standard monomials of S modulo the ideal."""
    if t < 0:
        return 0
    mindeg = min((sum(e) for e in ideal.gens), default=None)
    if mindeg is None or t < mindeg:
        return comb(t + ideal.nvars - 1, ideal.nvars - 1)
    return sum(
        1 for e in _degree_monomials(ideal.nvars, t) if not ideal.contains_monomial(e)
    )


def graded_kernel(
    images: Sequence[Poly], source_basis: Sequence
) -> list[list[Fraction]]:
    """Kernel of the linear map sending source basis element i to images[i].

    Returns coefficient vectors over the source basis.  All images must share
    a ring; the source basis only fixes the arity.
    """
    if len(images) != len(source_basis):
        raise DimensionMismatch(
            f"{len(source_basis)} source elements, {len(images)} images"
        )
    if not images:
        return []
    ring = images[0].ring
    monomials: set[Exponent] = set()
    for f in images:
        if f.ring != ring:
            raise VarSetMismatch("images in different rings")
        monomials.update(f.terms)
    rows_index = sorted(monomials, key=ring.order.key, reverse=True)
    matrix = [
        [f.terms.get(m, Fraction(0)) for f in images] for m in rows_index
    ]
    return linalg.kernel_basis(matrix, len(images))
