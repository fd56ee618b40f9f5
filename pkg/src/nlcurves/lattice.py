"""Root lattice theta series, Neron-Severi classes of elliptic surfaces,
and discriminant forms of A_n lattices.

Theta series are counted by exact enumeration. The Gram matrix is written as
``sum_i d_i (x_i + sum_{j>i} mu_ij x_j)**2`` and coordinates are fixed from the
last one down; the number of ways to complete a partial vector only depends on
the already-fixed coordinates that still couple to the free ones, so those
sub-counts are cached. For tree-shaped Gram matrices (all ADE lattices in the
Dynkin labelling) that coupling set has at most two members.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .exactq import DEFAULT_ORDER, QSeries


@dataclass(frozen=True)
class LatticeGram:
    gram: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        g = self.gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            if g[i][i] % 2:
                raise ValueError("Gram matrix must have even diagonal")
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        for r in range(1, n + 1):
            if _det([row[:r] for row in g[:r]]) <= 0:
                raise ValueError(f"Gram matrix is not positive definite (minor {r})")

    @classmethod
    def from_rows(cls, rows, name: str = "") -> "LatticeGram":
        return cls(tuple(tuple(int(x) for x in row) for row in rows), name)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def norm(self, v: Sequence[int]) -> int:
        g = self.gram
        return sum(v[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def direct_sum(self, other: "LatticeGram") -> "LatticeGram":
        n, m = self.rank, other.rank
        rows = [list(r) + [0] * m for r in self.gram] + [[0] * n + list(r) for r in other.gram]
        return LatticeGram.from_rows(rows, f"{self.name}+{other.name}")


def _det(m) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return det


def cartan_a(n: int) -> LatticeGram:
    rows = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    return LatticeGram.from_rows(rows, f"A{n}")


def _cartan_e8() -> LatticeGram:
    # Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
    rows = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in edges:
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
    return LatticeGram.from_rows(rows, "E8")


ROOT_LATTICES = {
    "A1": cartan_a(1),
    "A2": cartan_a(2),
    "A3": cartan_a(3),
    "E8": _cartan_e8(),
}


def _ldl(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= a[i][j] * a[i][k] / d[i]
    return d, mu


def norm_counts(lattice: LatticeGram, max_norm: int) -> dict[int, int]:
    """Number of lattice vectors of each norm (v, v) <= max_norm."""
    n = lattice.rank
    d, mu = _ldl(lattice.gram)
    # common denominator of every partial energy d_i * (x_i - c_i)**2
    scale = 1
    for i in range(n):
        for t in [d[i]] + [d[i] * mu[i][j] * mu[i][k] for j in range(n) for k in range(j, n)] + [
            d[i] * mu[i][j] for j in range(n)
        ]:
            scale = scale * t.denominator // math.gcd(scale, t.denominator)
    cap = max_norm * scale
    coupled = [
        tuple(sorted({j for l in range(i + 1) for j in range(i + 1, n) if mu[l][j] != 0})) for i in range(n)
    ]
    radius = [math.isqrt(int(max_norm / d[i])) + 1 for i in range(n)]

    @lru_cache(maxsize=None)
    def completions(i: int, fixed: tuple[int, ...]) -> dict[int, int]:
        # scaled energy of coordinates 0..i -> number of ways
        vals = dict(zip(coupled[i], fixed))
        centre = -sum((mu[i][j] * vals[j] for j in coupled[i] if mu[i][j]), Fraction(0))
        lo, hi = math.floor(centre) - radius[i], math.ceil(centre) + radius[i]
        out: dict[int, int] = {}
        for x in range(lo, hi + 1):
            e = d[i] * (x - centre) ** 2 * scale
            e = e.numerator  # integral by choice of scale
            if e > cap:
                continue
            if i == 0:
                out[e] = out.get(e, 0) + 1
                continue
            vals[i] = x
            sub = completions(i - 1, tuple(vals[j] for j in coupled[i - 1]))
            for s, cnt in sub.items():
                t = s + e
                if t <= cap:
                    out[t] = out.get(t, 0) + cnt
        return out

    counts: dict[int, int] = {}
    for e, cnt in completions(n - 1, ()).items():
        if e % scale:
            raise ArithmeticError("non-integral norm; Gram matrix is not integral")
        counts[e // scale] = counts.get(e // scale, 0) + cnt
    return counts


def theta_series(lattice: LatticeGram, order: int = DEFAULT_ORDER) -> QSeries:
    """sum_v q^{(v,v)/2} for an even positive definite lattice, exponents < order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = [0] * order
    for norm, cnt in norm_counts(lattice, 2 * (order - 1)).items():
        coeffs[norm // 2] += cnt
    return QSeries(coeffs, 0, order)


def theta_root(name: str, order: int = DEFAULT_ORDER) -> QSeries:
    try:
        lattice = ROOT_LATTICES[name]
    except KeyError:
        raise ValueError(f"unsupported lattice {name!r}; choose from {sorted(ROOT_LATTICES)}") from None
    return theta_series(lattice, order)


# -- elliptic surfaces ------------------------------------------------------


@dataclass(frozen=True)
class SurfaceInvariants:
    k: int
    p_g: int
    chi: int
    euler: int
    h11: int
    lattice_rank: int
    primitive_rank: int
    signature: tuple[int, int]


def surface_invariants(k: int) -> SurfaceInvariants:
    """Numerical invariants of a smooth Weierstrass elliptic surface with chi = k.

    Noether's formula gives e = 12 chi; with q = 0 the Hodge diamond is fixed
    by p_g = k - 1. ``lattice_rank`` is b2, the rank of all of H^2(S, Z);
    ``primitive_rank`` and ``signature`` describe the orthogonal complement of
    the polarization <f, z>, which is H^{2k-2} + E8(-1)^k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    p_g = k - 1
    euler = 12 * k
    h11 = euler - 2 - 2 * p_g
    return SurfaceInvariants(
        k=k,
        p_g=p_g,
        chi=1 + p_g,
        euler=euler,
        h11=h11,
        lattice_rank=euler - 2,
        primitive_rank=euler - 4,
        signature=(2 * p_g, h11 - 2),
    )


@dataclass(frozen=True)
class NSClass:
    """A class c_f*f + c_z*z + c_s*sigma in the span of fiber, zero section
    and one further section."""

    coords: tuple[int, int, int]
    k: int
    z_dot_sigma: int

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        k, zs = self.k, self.z_dot_sigma
        return ((0, 1, 1), (1, -k, zs), (1, zs, -k))

    def dot(self, other: "NSClass") -> int:
        if (other.k, other.z_dot_sigma) != (self.k, self.z_dot_sigma):
            raise ValueError("classes live in different lattices")
        g = self.gram
        return sum(self.coords[i] * g[i][j] * other.coords[j] for i in range(3) for j in range(3))

    def self_intersection(self) -> int:
        return self.dot(self)


def mw_power_class(z_dot_sigma: int, k: int, m: int) -> NSClass:
    """Class of the m-th Mordell-Weil multiple of the section sigma."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return NSClass(((z_dot_sigma + k) * m * (m - 1), -(m - 1), m), k, z_dot_sigma)


@dataclass(frozen=True)
class SectionShift:
    projection_norm: Fraction
    fiber_degree: int


def section_shift(z_dot_sigma: int, k: int) -> SectionShift:
    """Norm of the part of sigma orthogonal to <f, z>, and the fiber shift.

    f is isotropic, so instead of Gram-Schmidt one vector at a time the
    projection onto <f, z> is found by solving its 2x2 Gram system over Q.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    f = NSClass((1, 0, 0), k, z_dot_sigma)
    z = NSClass((0, 1, 0), k, z_dot_sigma)
    s = NSClass((0, 0, 1), k, z_dot_sigma)
    g = [[Fraction(f.dot(f)), Fraction(f.dot(z))], [Fraction(z.dot(f)), Fraction(z.dot(z))]]
    b = [Fraction(s.dot(f)), Fraction(s.dot(z))]
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    a_f = (b[0] * g[1][1] - g[0][1] * b[1]) / det
    a_z = (g[0][0] * b[1] - g[1][0] * b[0]) / det
    # perp = s - a_f f - a_z z ; its norm is s.s - (a_f s.f + a_z s.z)
    norm = s.dot(s) - (a_f * b[0] + a_z * b[1])
    return SectionShift(projection_norm=norm, fiber_degree=z_dot_sigma + k)


# -- discriminant forms -----------------------------------------------------


@dataclass(frozen=True)
class DiscriminantForm:
    """Orthogonal sum of the discriminant forms of A_{rho_1}, A_{rho_2}, ...

    On Z/(rho+1) the quadratic form is j -> rho * j**2 / (rho + 1) mod 2.
    """

    rhos: tuple[int, ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(r + 1 for r in self.rhos)

    def elements(self):
        return itertools.product(*(range(n) for n in self.orders))

    def q(self, x: Sequence[int]) -> Fraction:
        total = sum((Fraction(r * xi * xi, r + 1) for r, xi in zip(self.rhos, x)), Fraction(0))
        return total % 2

    def multiple(self, x: Sequence[int], t: int) -> tuple[int, ...]:
        return tuple((t * xi) % n for xi, n in zip(x, self.orders))

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), self.orders, 1)

    def cyclic_subgroup(self, x: Sequence[int]) -> set[tuple[int, ...]]:
        return {self.multiple(x, t) for t in range(self.exponent())}

    def is_totally_isotropic(self, subgroup) -> bool:
        return all(self.q(y) == 0 for y in subgroup)


def has_nontrivial_isotropic(rho_list: Sequence[int]) -> bool:
    """Whether the discriminant group has a nonzero totally isotropic subgroup.

    Any such subgroup contains a nonzero cyclic one, so it is enough to try
    the cyclic subgroup generated by each nonzero element.
    """
    if any(r < 1 for r in rho_list):
        raise ValueError("each rho must be at least 1")
    form = DiscriminantForm(tuple(rho_list))
    zero = tuple(0 for _ in rho_list)
    seen: set[frozenset] = set()
    for x in form.elements():
        if x == zero:
            continue
        sub = frozenset(form.cyclic_subgroup(x))
        if sub in seen:
            continue
        seen.add(sub)
        if form.is_totally_isotropic(sub):
            return True
    return False
