"""JSON and text rendering of a :class:`CountReport`.

Rationals are written as ``"p/q"`` strings and large integers as decimal
strings so that nothing is lost to 64-bit or floating point readers.
"""
from __future__ import annotations

import json

from .exactq import QSeries, as_rational, format_rational, format_series
from .modforms import ModForm
from .pipeline import (
    JSON_KEYS,
    MONOMIALS,
    Config,
    CountReport,
    Diagnostic,
    ThetaPolynomial,
    MONOMIAL_OF_KEY,
)
from .tangency import parse_partition, partition_key

_INT64 = 2**63


def _int_json(n: int):
    return n if -_INT64 <= n < _INT64 else str(n)


def _series_json(s: QSeries | None):
    if s is None:
        return None
    return {"low": s.low, "coeffs": [format_rational(c) for c in s.coeffs]}


def _series_from_json(obj) -> QSeries | None:
    if obj is None:
        return None
    return QSeries([as_rational(c) for c in obj["coeffs"]], obj["low"])


def report_to_dict(report: CountReport) -> dict:
    cfg = report.config
    phi = report.phi_basis_coeffs
    return {
        "m": cfg.m,
        "d": cfg.d,
        "k": report.k,
        "order": cfg.order,
        "c0": format_rational(report.c0),
        "t": {partition_key(mu): _int_json(v) for mu, v in report.t_values.items()},
        "phi_weight": phi.weight,
        "phi_basis": [
            {"a": a, "b": b, "coeff": format_rational(c)} for (a, b), c in phi.terms()
        ],
        "phi": _series_json(report.phi_expansion),
        "theta": _series_json(report.theta_expansion),
        "theta_poly": {
            JSON_KEYS[mono]: format_rational(report.theta_poly.coefficient(mono)) for mono in MONOMIALS
        },
        "counts": [{"n": n, "r": format_rational(r)} for n, r in report.counts],
        "gw": _series_json(report.gw_series),
        "diagnostics": [
            {"name": dg.name, "pass": dg.passed, "detail": dg.detail} for dg in report.diagnostics
        ],
    }


def report_from_dict(obj: dict) -> CountReport:
    cfg = Config(obj["m"], obj["d"], obj["order"])
    phi = ModForm(obj["phi_weight"], tuple(as_rational(t["coeff"]) for t in obj["phi_basis"]))
    return CountReport(
        config=cfg,
        k=obj["k"],
        t_values={parse_partition(key): int(v) for key, v in obj["t"].items()},
        c0=as_rational(obj["c0"]),
        phi_basis_coeffs=phi,
        phi_expansion=_series_from_json(obj["phi"]),
        theta_expansion=_series_from_json(obj["theta"]),
        theta_poly=ThetaPolynomial({MONOMIAL_OF_KEY[key]: as_rational(v) for key, v in obj["theta_poly"].items()}),
        counts=[(c["n"], as_rational(c["r"])) for c in obj["counts"]],
        gw_series=_series_from_json(obj.get("gw")),
        diagnostics=[Diagnostic(x["name"], x["pass"], x["detail"]) for x in obj["diagnostics"]],
    )


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _basis_text(phi: ModForm) -> str:
    parts = []
    for (a, b), c in phi.terms():
        if not c:
            continue
        mono = "*".join(_power(name, e) for name, e in (("E4", a), ("E6", b)) if e)
        mag = format_rational(abs(c))
        body = f"{mag}*{mono}" if mono else mag
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) or "0"


def report_to_text(report: CountReport) -> str:
    cfg = report.config
    lines = [
        f"m = {cfg.m}, d = {cfg.d}, k = {report.k}, order = {cfg.order}",
        f"c0 = {format_rational(report.c0)}",
    ]
    for mu, v in report.t_values.items():
        lines.append(f"t_{partition_key(mu)} = {v}")
    lines.append(f"φ = {_basis_text(report.phi_basis_coeffs)}")
    lines.append(f"φ(q) = {format_series(report.phi_expansion)}")
    lines.append(f"Θ(q) = {report.theta_poly}")
    lines.append(f"Θ(q) expanded = {format_series(report.theta_expansion)}")
    if report.gw_series is not None:
        lines.append(f"φ(q)·η(q)^(-{12 * report.k}) = {format_series(report.gw_series)}")
    lines.append("r_X(n):")
    for n, r in report.counts:
        lines.append(f"  {n}: {format_rational(r)}")
    lines.append("diagnostics:")
    for dg in report.diagnostics:
        lines.append(f"  [{'pass' if dg.passed else 'FAIL'}] {dg.name}: {dg.detail}")
    return "\n".join(lines) + "\n"


def emit_report(report: CountReport, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(report_to_dict(report), indent=2) + "\n").encode("utf-8")
    if format == "text":
        return report_to_text(report).encode("utf-8")
    raise ValueError(f"unknown format {format!r}")


def parse_report(data: bytes | str) -> CountReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return report_from_dict(json.loads(data))
