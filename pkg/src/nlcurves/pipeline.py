"""Curve counts r_X(n) for Weierstrass fibrations over hypersurfaces.

For Y a smooth degree-d hypersurface in P^{m+1} and k = 2m - d, the
generating series phi(q) is a modular form of weight 6k - 2 (weight 4 when
k = 1), and sum_{n >= k} r_X(n) q^n = phi(q) - Theta(q), where Theta is a
polynomial in the theta series of A1, A2, A3 accounting for singular surfaces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactq import DEFAULT_ORDER, QSeries, as_rational, format_rational
from .hodge import constant_term
from .lattice import theta_root
from .modforms import ModForm, eisenstein, eta_inverse_power, solve_in_weight
from .schubert import fano_class, integrate
from .tangency import Partition, t_number


class ConfigError(ValueError):
    """(m, d, order) does not describe a supported computation."""


@dataclass(frozen=True)
class Config:
    m: int
    d: int
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.m < 2:
            raise ConfigError(f"m must be at least 2, got {self.m}")
        if self.d < 1:
            raise ConfigError(f"d must be at least 1, got {self.d}")
        if self.k < 1:
            raise ConfigError(f"k = 2m - d = {self.k} must be at least 1")
        if self.order <= self.k:
            raise ConfigError(f"order {self.order} leaves no room for counts; need order > k = {self.k}")

    @property
    def k(self) -> int:
        return 2 * self.m - self.d


# -- theta polynomials ------------------------------------------------------

Monomial = tuple[int, int, int]  # exponents of theta1, theta2, theta3

# weighted degree < 4, in display order
MONOMIALS: tuple[Monomial, ...] = (
    (0, 0, 0),
    (1, 0, 0),
    (2, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (3, 0, 0),
)
JSON_KEYS = {
    (0, 0, 0): "const",
    (1, 0, 0): "theta1",
    (2, 0, 0): "theta1^2",
    (0, 1, 0): "theta2",
    (0, 0, 1): "theta3",
    (1, 1, 0): "theta1*theta2",
    (3, 0, 0): "theta1^3",
}
MONOMIAL_OF_KEY = {v: k for k, v in JSON_KEYS.items()}


def weighted_degree(mono: Monomial) -> int:
    return mono[0] + 2 * mono[1] + 3 * mono[2]


def _monomial_text(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"θ{i}")
        elif e > 1:
            parts.append(f"θ{i}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class ThetaPolynomial:
    """Rational polynomial in theta1, theta2, theta3 (weights 1, 2, 3)."""

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in dict(self.terms).items():
            c = as_rational(c)
            if c:
                clean[tuple(mono)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def theta(cls, i: int, coeff=1) -> "ThetaPolynomial":
        mono = [0, 0, 0]
        mono[i - 1] = 1
        return cls({tuple(mono): coeff})

    @classmethod
    def constant(cls, c) -> "ThetaPolynomial":
        return cls({(0, 0, 0): c})

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other: "ThetaPolynomial") -> "ThetaPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ThetaPolynomial(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return ThetaPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c) -> "ThetaPolynomial":
        c = as_rational(c)
        return ThetaPolynomial({m: c * v for m, v in self.terms.items()})

    def max_weighted_degree(self) -> int:
        return max((weighted_degree(m) for m in self.terms), default=0)

    def at_one(self) -> Fraction:
        """Value with every theta set to 1 (the constant term of its expansion)."""
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, thetas: Mapping[int, QSeries], order: int) -> QSeries:
        total = QSeries.constant(0, order)
        for mono, c in self.terms.items():
            term = QSeries.constant(c, order)
            for i, e in enumerate(mono, start=1):
                if e:
                    term = term * thetas[i] ** e
            total = total + term
        return total

    def __str__(self):
        ordered = [m for m in MONOMIALS if m in self.terms] + sorted(
            m for m in self.terms if m not in MONOMIALS
        )
        if not ordered:
            return "0"
        out = []
        for mono in ordered:
            c = self.terms[mono]
            mag = abs(c)
            text = _monomial_text(mono)
            if not text:
                body = format_rational(mag)
            elif mag == 1:
                body = text
            else:
                body = f"{format_rational(mag)}*{text}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)


@dataclass(frozen=True)
class SymbolicThetaPolynomial:
    """Theta polynomial whose coefficients are linear in named unknowns."""

    terms: Mapping[Monomial, Mapping[str, Fraction]]

    @property
    def unknowns(self) -> tuple[str, ...]:
        names: list[str] = []
        for lin in self.terms.values():
            for n in lin:
                if n not in names:
                    names.append(n)
        return tuple(names)

    def coefficient(self, mono: Monomial) -> dict[str, Fraction]:
        return {n: c for n, c in self.terms.get(tuple(mono), {}).items() if c}

    def substitute(self, values: Mapping[str, object]) -> ThetaPolynomial:
        missing = set(self.unknowns) - set(values)
        if missing:
            raise ValueError(f"no value given for {sorted(missing)}")
        return ThetaPolynomial(
            {
                mono: sum((c * as_rational(values[n]) for n, c in lin.items()), Fraction(0))
                for mono, lin in self.terms.items()
            }
        )

    def __str__(self):
        lines = []
        for mono in MONOMIALS:
            lin = self.coefficient(mono)
            if not lin:
                continue
            coeff = " + ".join(
                (n if c == 1 else f"{format_rational(c)}*{n}") for n, c in lin.items()
            ).replace("+ -", "- ")
            lines.append(f"({coeff})*{_monomial_text(mono) or '1'}")
        return " + ".join(lines)


def _linear_combination(pieces) -> SymbolicThetaPolynomial:
    terms: dict[Monomial, dict[str, Fraction]] = {}
    for name, poly in pieces:
        for mono, c in poly.terms.items():
            terms.setdefault(mono, {})
            terms[mono][name] = terms[mono].get(name, Fraction(0)) + c
    return SymbolicThetaPolynomial(terms)


def _basic_theta():
    t1, t2, t3 = (ThetaPolynomial.theta(i) for i in (1, 2, 3))
    return t1, t2, t3


def k4_template() -> SymbolicThetaPolynomial:
    """General shape of Theta(q) for k = 4, with every numeric input unknown."""
    t1, t2, t3 = _basic_theta()
    return _linear_combination(
        [
            ("a1", t1),
            ("a2", t1 * t1 - 2 * t1),
            ("a3", t2 - 3 * t1),
            ("t4", t3 - 4 * t2 - 3 * (t1 * t1) + 18 * t1),
            ("t222", t1 * t1 * t1 - 3 * t1),
            ("t23", t1 * t2 - 4 * t1),
        ]
    )


# -- the pipeline ----------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    name: str
    passed: bool
    detail: str


@dataclass
class CountReport:
    config: Config
    k: int
    t_values: dict[Partition, int]
    c0: Fraction
    phi_basis_coeffs: ModForm
    phi_expansion: QSeries
    theta_expansion: QSeries
    theta_poly: ThetaPolynomial
    counts: list[tuple[int, Fraction]]
    gw_series: QSeries | None = None
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def count(self, n: int) -> Fraction:
        for i, r in self.counts:
            if i == n:
                return r
        raise KeyError(n)

    @property
    def calibration_ok(self) -> bool:
        return all(r.denominator == 1 for _, r in self.counts)


def theta_basis(order: int) -> dict[int, QSeries]:
    return {1: theta_root("A1", order), 2: theta_root("A2", order), 3: theta_root("A3", order)}


def _phi_k1(cfg: Config):
    n_lines = integrate(fano_class(cfg.m, cfg.d))
    # N * theta_E8 = N * E4
    phi = ModForm(4, (Fraction(n_lines),))
    theta_poly = ThetaPolynomial.constant(n_lines)
    e8 = theta_root("E8", cfg.order)
    diags = [Diagnostic("e8_theta_is_e4", e8 == eisenstein(4, cfg.order), "theta_E8 = E4 through the truncation order")]
    return {}, Fraction(n_lines), phi, theta_poly, diags


def _phi_k2(cfg: Config):
    c0 = constant_term(cfg.m, cfg.d).c0
    phi = solve_in_weight(10, [(0, c0)], cfg.order)
    t2 = t_number(cfg.m, cfg.d, (2,))
    t1 = ThetaPolynomial.theta(1)
    theta_poly = ThetaPolynomial.constant(c0) + (t1 - ThetaPolynomial.constant(1)).scale(Fraction(t2, 4))
    phi1 = phi.expansion(cfg.order)[1]
    diags = [
        Diagnostic(
            "phi1_is_half_t2",
            phi1 == Fraction(t2, 2),
            f"[phi]_1 = {format_rational(phi1)}, t_2/2 = {format_rational(Fraction(t2, 2))}",
        )
    ]
    return {(2,): t2}, c0, phi, theta_poly, diags


def _phi_k3(cfg: Config):
    c0 = constant_term(cfg.m, cfg.d).c0
    t22 = t_number(cfg.m, cfg.d, (2, 2))
    t3 = t_number(cfg.m, cfg.d, (3,))
    phi = solve_in_weight(16, [(0, c0), (2, t22)], cfg.order)
    expansion = phi.expansion(cfg.order)
    phi1 = expansion[1]
    t1, t2, _ = _basic_theta()
    one = ThetaPolynomial.constant(1)
    shape = (
        t1.scale(phi1 / 2)
        + (t1 * t1 - 2 * t1).scale(Fraction(t22, 4))
        + (t2 - 3 * t1).scale(Fraction(t3, 6))
    )
    theta_poly = shape + one.scale(c0 - shape.at_one())
    again = solve_in_weight(16, [(0, c0), (1, phi1)], cfg.order)
    diags = [
        Diagnostic(
            "resolve_consistency",
            again == phi,
            "re-solving with [phi]_1 in place of [phi]_2 gives the same form",
        )
    ]
    return {(2, 2): t22, (3,): t3}, c0, phi, theta_poly, diags


_ASSEMBLERS = {1: _phi_k1, 2: _phi_k2, 3: _phi_k3}


def run_pipeline(config: Config, with_gw: bool = False) -> CountReport:
    k = config.k
    if k == 4:
        raise ConfigError("k = 4 has no numeric pipeline; use k4_template() for the symbolic form of Theta")
    if k not in _ASSEMBLERS:
        raise ConfigError(f"k = 2m - d = {k}; only k in 1..3 can be computed")
    order = config.order
    t_values, c0, phi, theta_poly, diags = _ASSEMBLERS[k](config)
    phi_exp = phi.expansion(order)
    theta_exp = theta_poly.evaluate(theta_basis(order), order)
    diff = phi_exp - theta_exp
    low = [diff[n] for n in range(k)]
    diags.append(
        Diagnostic(
            "vanishing_below_k",
            all(c == 0 for c in low),
            f"coefficients of phi - Theta below q^{k}: {[format_rational(c) for c in low]}",
        )
    )
    diags.append(
        Diagnostic(
            "theta_constant_is_c0",
            theta_exp[0] == c0 == phi_exp[0],
            f"Theta(0) = {format_rational(theta_exp[0])}, c0 = {format_rational(c0)}",
        )
    )
    counts = [(n, diff[n]) for n in range(k, order)]
    bad = [n for n, r in counts if r.denominator != 1]
    diags.append(
        Diagnostic(
            "counts_integral",
            not bad,
            "all r_X(n) are integers" if not bad else f"non-integral r_X(n) at n = {bad}",
        )
    )
    negative = [n for n, r in counts if r < 0]
    diags.append(
        Diagnostic(
            "counts_nonnegative",
            not negative,
            "all r_X(n) are non-negative" if not negative else f"negative r_X(n) at n = {negative}",
        )
    )
    report = CountReport(
        config=config,
        k=k,
        t_values=t_values,
        c0=c0,
        phi_basis_coeffs=phi,
        phi_expansion=phi_exp,
        theta_expansion=theta_exp,
        theta_poly=theta_poly,
        counts=counts,
        diagnostics=diags,
    )
    if with_gw:
        report.gw_series = gw_series(config, phi_exp)
    return report


def gw_series(config: Config, phi_expansion: QSeries | None = None) -> QSeries:
    """phi(q) * eta(q)^(-12k) for the threefold case k = 2."""
    if config.k != 2:
        raise ConfigError(f"the eta twist is only defined here for k = 2, got k = {config.k}")
    if phi_expansion is None:
        c0 = constant_term(config.m, config.d).c0
        phi_expansion = solve_in_weight(10, [(0, c0)], config.order).expansion(config.order)
    eta = eta_inverse_power(config.k, phi_expansion.order - config.k // 2)
    return phi_expansion * eta
