"""Level one modular forms as polynomials in E4 and E6."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactq import DEFAULT_ORDER, QSeries, as_rational, qs_inv_unit, qs_mul


class AmbiguousConstraintsError(ValueError):
    """The constraint exponents do not pin down a unique form."""


def divisor_sum(n: int, power: int) -> int:
    """sigma_power(n) by trial division."""
    if n < 1:
        raise ValueError("divisor sums are defined for n >= 1")
    return sum(t**power for t in range(1, n + 1) if n % t == 0)


_EISENSTEIN = {4: (240, 3), 6: (-504, 5)}


def eisenstein(weight: int, order: int = DEFAULT_ORDER) -> QSeries:
    """E4 or E6, normalized to constant term 1."""
    if weight not in _EISENSTEIN:
        raise ValueError(f"only E4 and E6 are available, not weight {weight}")
    scale, power = _EISENSTEIN[weight]
    coeffs = [1] + [scale * divisor_sum(n, power) for n in range(1, order)]
    return QSeries(coeffs, 0, order)


@dataclass(frozen=True)
class ModFormBasis:
    """Monomials E4**a * E6**b of a fixed weight, a descending."""

    weight: int
    monomials: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def expansions(self, order: int = DEFAULT_ORDER) -> list[QSeries]:
        e4, e6 = eisenstein(4, order), eisenstein(6, order)
        return [e4**a * e6**b for a, b in self.monomials]


def mod_basis(weight: int) -> ModFormBasis:
    if weight < 4 or weight % 2:
        raise ValueError(f"weight must be even and at least 4, got {weight}")
    monos = tuple((a, (weight - 4 * a) // 6) for a in range(weight // 4, -1, -1) if (weight - 4 * a) % 6 == 0)
    return ModFormBasis(weight, monos)


def dimension_formula(weight: int) -> int:
    """Classical dim M_w(SL2(Z)) for even w >= 4."""
    if weight % 12 == 2:
        return weight // 12
    return weight // 12 + 1


@dataclass(frozen=True)
class ModForm:
    weight: int
    coeffs_in_basis: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs_in_basis) != self.basis.dim:
            raise ValueError("coefficient count does not match the basis dimension")

    @property
    def basis(self) -> ModFormBasis:
        return mod_basis(self.weight)

    def expansion(self, order: int = DEFAULT_ORDER) -> QSeries:
        total = QSeries.constant(0, order)
        for c, f in zip(self.coeffs_in_basis, self.basis.expansions(order)):
            total = total + f * c
        return total

    def terms(self):
        """Pairs ((a, b), coefficient)."""
        return list(zip(self.basis.monomials, self.coeffs_in_basis))


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Gauss-Jordan over Q for a square system; raises on singular input."""
    n = len(matrix)
    rows = [[as_rational(x) for x in row] + [as_rational(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise AmbiguousConstraintsError("constraint matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [row[n] for row in rows]


def solve_in_weight(weight: int, constraints, order: int = DEFAULT_ORDER) -> ModForm:
    """The unique weight-``weight`` form with prescribed coefficients.

    ``constraints`` is a sequence of ``(exponent, value)`` pairs, one per
    basis element, with distinct exponents.
    """
    basis = mod_basis(weight)
    constraints = [(int(n), as_rational(v)) for n, v in constraints]
    if len(constraints) != basis.dim:
        raise ValueError(f"weight {weight} needs {basis.dim} constraints, got {len(constraints)}")
    exps = [n for n, _ in constraints]
    if len(set(exps)) != len(exps):
        raise AmbiguousConstraintsError(f"repeated constraint exponents {exps}")
    need = max(max(exps) + 1, order)
    series = basis.expansions(need)
    matrix = [[f[n] for f in series] for n in exps]
    coeffs = solve_exact(matrix, [v for _, v in constraints])
    return ModForm(weight, tuple(coeffs))


def euler_product(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n), truncated."""
    prod = QSeries.constant(1, order)
    for n in range(1, order):
        factor = [0] * order
        factor[0], factor[n] = 1, -1
        prod = qs_mul(prod, QSeries(factor, 0, order))
    return prod


def eta_inverse_power(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """eta(q)**(-12k) = q**(-k/2) * prod (1 - q^n)**(-12k), exponents below ``order``.

    Only even k: for odd k the prefactor has a half-integral exponent and it
    is not clear how it should be aligned with integral q-expansions.
    """
    if k % 2:
        raise ValueError(
            f"k={k} is odd: eta^(-12k) carries q^(-k/2) with a half-integral exponent, "
            "so the twisted series is not a Laurent series in q"
        )
    if k < 0:
        raise ValueError("k must be non-negative")
    shift = k // 2
    unit_order = order + shift
    unit = qs_inv_unit(euler_product(unit_order) ** (12 * k))
    return QSeries(unit.coeffs, -shift, order)
