"""Lines with prescribed tangency to the discriminant hypersurface.

The discriminant 4A^3 + 27B^2 of a Weierstrass fibration with k = 2m - d has
degree 12k, and a general plane section is a plane curve of degree 12k with
24k^2 cusps (the points of (A) n (B)). T_mu is the locus of lines meeting it
with contact pattern mu; its classes in G(1, m+1) follow from Plucker
formulas for that plane curve plus one extra number in P^3 each.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .schubert import SchubertClass, TwoRowPartition, fano_class, integrate

Partition = tuple[int, ...]

SUPPORTED_MU: tuple[Partition, ...] = ((2,), (3,), (2, 2))


class InconsistentPluckerData(ValueError):
    pass


def parse_partition(text) -> Partition:
    """``"2,2"`` or ``(2, 2)`` -> (2, 2); trailing 1's are dropped."""
    if isinstance(text, str):
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
    else:
        parts = [int(p) for p in text]
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return tuple(sorted((p for p in parts if p > 1), reverse=True))


def partition_key(mu: Partition) -> str:
    return ",".join(str(p) for p in mu)


@dataclass(frozen=True)
class PluckerData:
    d: int
    c: int
    d_star: int
    c_star: int
    delta_star: int


def plucker(d: int, c: int) -> PluckerData:
    """Dual degree, flex count and bitangent count of a plane curve of
    degree d whose only singularities are c ordinary cusps."""
    if d < 3 or c < 0:
        raise ValueError(f"need d >= 3 and c >= 0, got d={d}, c={c}")
    d_star = d * (d - 1) - 3 * c
    c_star = 3 * d * (d - 2) - 8 * c
    twice = d_star * (d_star - 1) - d - 3 * c_star
    if twice % 2:
        raise InconsistentPluckerData(f"bitangent count {twice}/2 is not an integer for d={d}, c={c}")
    return PluckerData(d, c, d_star, c_star, twice // 2)


def discriminant_section(k: int) -> tuple[int, int]:
    """(degree, cusp count) of a general plane section of the discriminant."""
    return 12 * k, (4 * k) * (6 * k)


def _closed_form_coefficients(k: int, mu: Partition) -> dict[TwoRowPartition, int]:
    if mu == (2,):
        return {TwoRowPartition(1): 12 * k * (6 * k - 1)}
    if mu == (3,):
        return {
            TwoRowPartition(1, 1): 24 * k * (10 * k - 3),
            TwoRowPartition(2): 24 * k * (6 * k - 1) * (4 * k - 1),
        }
    if mu == (2, 2):
        return {
            TwoRowPartition(1, 1): 108 * k * (3 * k - 1) * (8 * k * k - 1),
            TwoRowPartition(2): 36 * k * (6 * k - 1) * (4 * k - 1) * (3 * k - 1),
        }
    raise ValueError(
        f"no class available for mu={mu}; supported: {[partition_key(p) for p in SUPPORTED_MU]}"
    )


def isotropy_order(mu: Partition) -> int:
    """Order of prod_j Sym(mu_j)."""
    return math.prod(math.factorial(p) for p in mu)


@dataclass(frozen=True)
class TangencyRecord:
    k: int
    mu: Partition
    cls: SchubertClass
    isotropy_order: int

    @property
    def codim(self) -> int:
        return sum(p - 1 for p in self.mu)


def tangency_class(k: int, mu, m: int | None = None) -> TangencyRecord:
    """Class of T_mu(Delta). ``m`` picks the ambient G(1, m+1); the
    coefficients only depend on k."""
    mu = parse_partition(mu)
    if not 1 <= k <= 4:
        raise ValueError(f"k must lie in 1..4, got {k}")
    coeffs = _closed_form_coefficients(k, mu)
    ambient = m if m is not None else max(2, sum(p - 1 for p in mu))
    return TangencyRecord(k, mu, SchubertClass(ambient, coeffs), isotropy_order(mu))


def t_number(m: int, d: int, mu) -> int:
    """t_mu: the number of lines on Y whose surface has tangency type mu."""
    mu = parse_partition(mu)
    k = 2 * m - d
    if not 1 <= k <= 3:
        raise ValueError(f"k = 2m - d = {k}; t-numbers are computed for 1 <= k <= 3")
    codim = sum(p - 1 for p in mu)
    if codim != k - 1:
        raise ValueError(
            f"mu={partition_key(mu)} has codimension {codim}, but a zero-dimensional "
            f"intersection with F(Y) needs codimension k - 1 = {k - 1}"
        )
    rec = tangency_class(k, mu, m)
    return integrate(rec.cls * fano_class(m, d))


# -- independent re-derivations of the sigma_2 coefficients ------------------


def principal_parts_c3_sigma2(k: int) -> int:
    """c_3 of the second-order principal parts bundle of O(12k), paired with
    sigma_2 on the universal line over G(1, 3)."""
    return 96 * k * (6 * k - 1) * (3 * k - 1) + 48 * k * (9 * k - 2) + 24 * k


def cusp_tangent_lines(k: int) -> int:
    """Lines through a general point of P^3 meeting (A) n (B) tangent to (B):
    degree of the Gauss map of (B) restricted to (A) n (B)."""
    return 4 * k * 6 * k * (6 * k - 1)


CUSP_TANGENT_MULTIPLICITY = 8


def t3_sigma2_via_principal_parts(k: int) -> int:
    if not 1 <= k <= 4:
        raise ValueError(f"k must lie in 1..4, got {k}")
    return principal_parts_c3_sigma2(k) - CUSP_TANGENT_MULTIPLICITY * cusp_tangent_lines(k)


@dataclass(frozen=True)
class _SurfaceClass:
    """a*H + b*R' on the normalized discriminant surface in P^3."""

    h: Fraction
    r: Fraction

    def __add__(self, o):
        return _SurfaceClass(self.h + o.h, self.r + o.r)

    def __sub__(self, o):
        return _SurfaceClass(self.h - o.h, self.r - o.r)

    def __rmul__(self, c):
        return _SurfaceClass(c * self.h, c * self.r)


def _pairing(k: int):
    hh, hr, rr = 12 * k, 24 * k * k, 48 * k**3

    def dot(x: _SurfaceClass, y: _SurfaceClass) -> Fraction:
        return x.h * y.h * hh + (x.h * y.r + x.r * y.h) * hr + x.r * y.r * rr

    return dot


def ramification_data(k: int) -> dict[str, Fraction]:
    """Intersection numbers on the normalization of P^3 n Delta for the
    projection from a general point."""
    dot = _pairing(k)
    H = _SurfaceClass(Fraction(1), Fraction(0))
    R1 = _SurfaceClass(Fraction(0), Fraction(1))
    # adjunction in the blow-up along (A) n (B), and Riemann-Hurwitz K = -3H + R' + R''
    K = (12 * k - 4) * H - 2 * R1
    R2 = K + 3 * H - R1
    genus = (dot(K + R2, R2) + 2) / 2
    return {
        "R2_H": R2.h,
        "R2_R1": R2.r,
        "R1.R2": dot(R1, R2),
        "genus_R2": genus,
    }


def plane_curve_arithmetic_genus(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


def t22_sigma2_via_genus(k: int) -> int:
    """Bitangent lines to P^3 n Delta through a general point.

    The branch curve B'' of the projection has degree 12k(6k - 1); its
    delta invariant p_a(B'') - g(R'') counts nodes plus cusps, and the cusps
    are the flex lines through the point.
    """
    if not 1 <= k <= 4:
        raise ValueError(f"k must lie in 1..4, got {k}")
    branch_degree = 12 * k * (6 * k - 1)
    genus = ramification_data(k)["genus_R2"]
    delta = plane_curve_arithmetic_genus(branch_degree) - genus
    flexes = t3_sigma2_via_principal_parts(k)
    out = delta - flexes
    if out.denominator != 1:
        raise ArithmeticError(f"non-integral node count {out}")
    return int(out)


def branch_curve_delta(k: int) -> int:
    branch_degree = 12 * k * (6 * k - 1)
    return int(plane_curve_arithmetic_genus(branch_degree) - ramification_data(k)["genus_R2"])
