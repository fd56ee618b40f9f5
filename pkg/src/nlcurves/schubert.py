"""Cohomology of the Grassmannian G(1, m+1) of lines in P^{m+1}.

Everything is done with polynomials in the two Chern roots x1, x2 of the dual
tautological bundle S^v, so sigma_1 = x1 + x2 and sigma_11 = x1*x2. A Schubert
class sigma_{a,b} is the Schur polynomial s_{(a,b)}(x1, x2); products are
computed as polynomials and re-expanded in the Schur basis, dropping every
sigma_{a,b} with a > m.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class TwoRowPartition:
    a: int
    b: int = 0

    def __post_init__(self):
        if not self.a >= self.b >= 0:
            raise ValueError(f"need a >= b >= 0, got ({self.a}, {self.b})")

    @property
    def size(self) -> int:
        return self.a + self.b

    def __str__(self):
        return f"sigma_{self.a},{self.b}" if self.b else f"sigma_{self.a}"


class ChernRootPoly:
    """Symmetric integer polynomial in x1, x2.

    Stored on the monomial symmetric basis: key (i, j) with i >= j stands for
    m_{i,j} = x1^i x2^j + x1^j x2^i (just x1^i x2^i when i == j).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {k: v for k, v in (terms or {}).items() if v}
        for i, j in self.terms:
            if i < j:
                raise ValueError("monomial symmetric keys need i >= j")

    @classmethod
    def from_monomials(cls, mono: Mapping[tuple[int, int], int]) -> "ChernRootPoly":
        for (i, j), c in mono.items():
            if mono.get((j, i), 0) != c:
                raise ValueError("polynomial is not symmetric in x1, x2")
        return cls({(i, j): c for (i, j), c in mono.items() if i >= j})

    @classmethod
    def one(cls) -> "ChernRootPoly":
        return cls({(0, 0): 1})

    def monomials(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self.terms.items():
            out[(i, j)] = c
            out[(j, i)] = c
        return out

    def __mul__(self, other: "ChernRootPoly") -> "ChernRootPoly":
        prod: dict[tuple[int, int], int] = defaultdict(int)
        for (i, j), c in self.monomials().items():
            for (k, l), d in other.monomials().items():
                prod[(i + k, j + l)] += c * d
        return ChernRootPoly.from_monomials(prod)

    def __add__(self, other: "ChernRootPoly") -> "ChernRootPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ChernRootPoly(out)

    def scale(self, c: int) -> "ChernRootPoly":
        return ChernRootPoly({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, ChernRootPoly) and self.terms == other.terms

    def __repr__(self):
        return f"ChernRootPoly({self.terms})"

    def to_schur(self) -> dict[TwoRowPartition, int]:
        """Expand on Schur polynomials s_{a,b}; exact since only two variables."""
        rem = self.monomials()
        out: dict[TwoRowPartition, int] = {}
        while rem:
            # dominant monomial: largest x1-exponent, then largest x2-exponent
            a, b = max(rem)
            c = rem[(a, b)]
            out[TwoRowPartition(a, b)] = c
            for mono, v in schur_monomials(a, b).items():
                nv = rem.get(mono, 0) - c * v
                if nv:
                    rem[mono] = nv
                else:
                    rem.pop(mono, None)
        return out


def schur_monomials(a: int, b: int) -> dict[tuple[int, int], int]:
    """s_{(a,b)}(x1, x2) = (x1 x2)^b * h_{a-b}(x1, x2)."""
    return {(b + i, a - i): 1 for i in range(a - b + 1)}


def linear_form_product(roots: Iterable[tuple[int, int]]) -> ChernRootPoly:
    """prod (p x1 + r x2) over the given (p, r); must come out symmetric."""
    mono: dict[tuple[int, int], int] = {(0, 0): 1}
    for p, r in roots:
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (i, j), c in mono.items():
            if p:
                nxt[(i + 1, j)] += c * p
            if r:
                nxt[(i, j + 1)] += c * r
        mono = {k: v for k, v in nxt.items() if v}
    return ChernRootPoly.from_monomials(mono)


@dataclass
class SchubertClass:
    ambient_m: int
    terms: dict[TwoRowPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.ambient_m < 1:
            raise ValueError("ambient_m must be at least 1")
        clean = {}
        for p, c in self.terms.items():
            if not isinstance(p, TwoRowPartition):
                p = TwoRowPartition(*p)
            if p.a > self.ambient_m:
                raise ValueError(f"{p} does not exist in G(1, {self.ambient_m + 1})")
            if c:
                clean[p] = clean.get(p, 0) + c
        self.terms = {p: c for p, c in clean.items() if c}

    @classmethod
    def sigma(cls, m: int, a: int, b: int = 0, coeff: int = 1) -> "SchubertClass":
        return cls(m, {TwoRowPartition(a, b): coeff})

    @classmethod
    def from_poly(cls, m: int, poly: ChernRootPoly) -> "SchubertClass":
        return cls(m, {p: c for p, c in poly.to_schur().items() if p.a <= m})

    @property
    def dimension(self) -> int:
        """Complex dimension of G(1, m+1)."""
        return 2 * self.ambient_m

    def to_poly(self) -> ChernRootPoly:
        mono: dict[tuple[int, int], int] = defaultdict(int)
        for p, c in self.terms.items():
            for k, v in schur_monomials(p.a, p.b).items():
                mono[k] += c * v
        return ChernRootPoly.from_monomials(mono)

    def codims(self) -> set[int]:
        return {p.size for p in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.codims()) <= 1

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertClass(self.ambient_m, {p: c * other for p, c in self.terms.items()})
        return schur_mul(self, other)

    __rmul__ = __mul__

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        if other.ambient_m != self.ambient_m:
            raise ValueError("ambient Grassmannians differ")
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return SchubertClass(self.ambient_m, out)

    def __eq__(self, other):
        return (
            isinstance(other, SchubertClass)
            and self.ambient_m == other.ambient_m
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms, key=lambda p: (-p.size, -p.a)):
            c = self.terms[p]
            parts.append(f"{c}*{p}" if c != 1 else str(p))
        return " + ".join(parts).replace("+ -", "- ")


def schur_mul(u: SchubertClass, v: SchubertClass) -> SchubertClass:
    if u.ambient_m != v.ambient_m:
        raise ValueError(f"ambient mismatch: G(1,{u.ambient_m + 1}) vs G(1,{v.ambient_m + 1})")
    return SchubertClass.from_poly(u.ambient_m, u.to_poly() * v.to_poly())


def integrate(u: SchubertClass) -> int:
    """Degree: the coefficient of the point class sigma_{m,m}."""
    m = u.ambient_m
    return u.terms.get(TwoRowPartition(m, m), 0)


def sym_power_roots(d: int) -> list[tuple[int, int]]:
    """Chern roots of Sym^d S^v as linear forms i x1 + (d - i) x2."""
    return [(i, d - i) for i in range(d + 1)]


def fano_class(m: int, d: int) -> SchubertClass:
    """Class of the Fano scheme of lines on a degree-d hypersurface in P^{m+1},
    the top Chern class c_{d+1}(Sym^d S^v)."""
    if m < 2 or d < 1:
        raise ValueError(f"need m >= 2 and d >= 1, got m={m}, d={d}")
    if 2 * m - d < 1:
        raise ValueError(f"k = 2m - d = {2 * m - d} must be at least 1")
    return SchubertClass.from_poly(m, linear_form_product(sym_power_roots(d)))


def hodge_bundle_chern(k: int, m: int) -> SchubertClass:
    """Top Chern class of Sym^{k-2}(S^v) twisted by O(sigma_1)."""
    if not 2 <= k <= 4:
        raise ValueError(f"Hodge bundle class implemented for 2 <= k <= 4, got k={k}")
    if m < 1:
        raise ValueError("m must be positive")
    roots = [(p + 1, r + 1) for p, r in sym_power_roots(k - 2)]
    return SchubertClass.from_poly(m, linear_form_product(roots))
