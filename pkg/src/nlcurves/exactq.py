"""Exact rationals and truncated Laurent q-series.

Rationals are :class:`fractions.Fraction`. A :class:`QSeries` knows the
coefficients of ``q**n`` for ``low <= n < order`` and nothing beyond; asking
for anything outside that window raises :class:`TruncationError` instead of
returning zero.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_ORDER = 24


class TruncationError(IndexError):
    """A coefficient outside the known window of a series was requested."""


class NotAUnitError(ValueError):
    pass


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused; everything in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QSeries:
    """Truncated Laurent series ``sum_{low <= n < order} c_n q**n``."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable, low: int = 0, order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = low + len(cs)
        if order < low:
            raise ValueError(f"truncation order {order} below lowest exponent {low}")
        width = order - low
        if len(cs) > width:
            cs = cs[:width]
        else:
            cs.extend([Fraction(0)] * (width - len(cs)))
        self.low = low
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls([c], 0, order)

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1, order: int = DEFAULT_ORDER) -> "QSeries":
        if n >= order:
            raise TruncationError(f"q^{n} lies beyond truncation order {order}")
        return cls([c], n, order)

    @property
    def order(self) -> int:
        return self.low + len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return qs_coeff(self, n)

    def items(self):
        for i, c in enumerate(self.coeffs):
            yield self.low + i, c

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend a series known below q^{self.order} to q^{order}")
        return QSeries(self.coeffs, self.low, max(order, self.low))

    def valuation(self) -> int | None:
        for n, c in self.items():
            if c:
                return n
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations -------------------------------------------------

    def _aligned(self, other: "QSeries"):
        low = min(self.low, other.low)
        order = min(self.order, other.order)
        return low, order

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.order <= 0:
                return self
            other = QSeries.constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        low, order = self._aligned(other)
        out = [Fraction(0)] * max(order - low, 0)
        for s in (self, other):
            for n, c in s.items():
                if low <= n < order:
                    out[n - low] += c
        return QSeries(out, low, max(order, low))

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.low, self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return QSeries([c * x for x in self.coeffs], self.low, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        out = QSeries.constant(1, self.order - self.low)
        base = self
        while e:
            if e & 1:
                out = qs_mul(out, base)
            e >>= 1
            if e:
                base = qs_mul(base, base)
        return out

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"QSeries({format_series(self)})"


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, valid below ``min(a.order + b.low, b.order + a.low)``."""
    low = a.low + b.low
    order = min(a.order + b.low, b.order + a.low)
    width = order - low
    out = [Fraction(0)] * width
    ac, bc = a.coeffs, b.coeffs
    for i, x in enumerate(ac):
        if i >= width:
            break
        if not x:
            continue
        for j in range(min(len(bc), width - i)):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return QSeries(out, low, order)


def qs_inv_unit(a: QSeries) -> QSeries:
    """Multiplicative inverse of a power series with non-zero constant term."""
    if a.low != 0:
        raise NotAUnitError(f"series starts at q^{a.low}; only q^0-leading units are invertible here")
    if a.order <= 0:
        raise NotAUnitError("empty series")
    c0 = a.coeffs[0]
    if c0 == 0:
        raise NotAUnitError("constant term is zero")
    n = a.order
    inv0 = 1 / c0
    b = [Fraction(0)] * n
    b[0] = inv0
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, k + 1):
            if a.coeffs[i]:
                s += a.coeffs[i] * b[k - i]
        b[k] = -s * inv0
    return QSeries(b, 0, n)


def qs_coeff(a: QSeries, n: int) -> Fraction:
    if not a.low <= n < a.order:
        raise TruncationError(
            f"coefficient of q^{n} requested; series is known only for {a.low} <= n < {a.order}"
        )
    return a.coeffs[n - a.low]


def series_from_ints(coeffs: Sequence[int], order: int | None = None) -> QSeries:
    return QSeries(coeffs, 0, order)


def format_series(s: QSeries, var: str = "q") -> str:
    """Render as ``-2 + 528*q + 270864*q^2 + O(q^3)``."""
    parts: list[str] = []
    for n, c in s.items():
        if not c:
            continue
        if n == 0:
            mono = ""
        elif n == 1:
            mono = var
        else:
            mono = f"{var}^{n}"
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    parts.append(("+ " if parts else "") + f"O({var}^{s.order})")
    return " ".join(parts)
