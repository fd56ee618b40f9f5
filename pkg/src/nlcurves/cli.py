"""Command line entry point: ``nlcurves <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys

from .exactq import DEFAULT_ORDER, format_series
from .lattice import ROOT_LATTICES, theta_root
from .modforms import eisenstein
from .pipeline import Config, ConfigError, k4_template, run_pipeline
from .report import emit_report
from .schubert import fano_class, integrate
from .tangency import parse_partition, partition_key, t_number, tangency_class

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CALIBRATION = 3


def _cmd_pipeline(args) -> int:
    cfg = Config(args.m, args.d, args.order)
    if cfg.k == 4:
        print(f"k = 4: no numeric data; symbolic Theta(q) = {k4_template()}")
        return EXIT_OK
    report = run_pipeline(cfg, with_gw=args.gw)
    sys.stdout.buffer.write(emit_report(report, args.format))
    sys.stdout.flush()
    return EXIT_OK if report.calibration_ok else EXIT_CALIBRATION


def _cmd_theta(args) -> int:
    print(f"θ_{args.lattice}(q) = {format_series(theta_root(args.lattice, args.order))}")
    return EXIT_OK


def _cmd_eisenstein(args) -> int:
    print(f"E{args.weight}(q) = {format_series(eisenstein(args.weight, args.order))}")
    return EXIT_OK


def _cmd_schubert(args) -> int:
    cfg = Config(args.m, args.d)
    cls = fano_class(cfg.m, cfg.d)
    print(f"[F(Y)] = {cls}  in G(1,{cfg.m + 1}), codimension {cfg.d + 1}")
    if cfg.d + 1 == 2 * cfg.m:
        print(f"degree = {integrate(cls)}")
    else:
        print(f"dim F(Y) = {cfg.k - 1}")
    return EXIT_OK


def _cmd_tangency(args) -> int:
    mu = parse_partition(args.mu)
    rec = tangency_class(args.k, mu, args.m)
    print(f"[T_{partition_key(mu)}] = {rec.cls}  (k = {args.k}, isotropy order {rec.isotropy_order})")
    if args.m is not None and args.d is not None:
        if 2 * args.m - args.d != args.k:
            raise ConfigError(f"2m - d = {2 * args.m - args.d} does not match --k {args.k}")
        print(f"t_{partition_key(mu)} = {t_number(args.m, args.d, mu)}")
    return EXIT_OK


def _cmd_template(args) -> int:
    print(f"Θ(q) = {k4_template()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlcurves", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pipeline", help="phi, Theta and r_X(n) for one (m, d)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--gw", action="store_true", help="include phi * eta^(-12k) (k = 2 only)")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("theta", help="theta series of a root lattice")
    p.add_argument("--lattice", choices=sorted(ROOT_LATTICES), required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("eisenstein", help="E4 or E6")
    p.add_argument("--weight", type=int, choices=[4, 6], required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=_cmd_eisenstein)

    p = sub.add_parser("schubert", help="class of the Fano scheme of lines")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("tangency", help="class of a tangency locus")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", required=True, help="2, 3 or 2,2")
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(func=_cmd_tangency)

    p = sub.add_parser("template-k4", help="symbolic Theta(q) for k = 4")
    p.set_defaults(func=_cmd_template)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
