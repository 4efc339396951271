"""Command line front end.

Thin client over the core package: five one-shot subcommands (eval,
verify, scan, contour, strand), human-readable text plus machine-readable
CSV/JSON, all numeric output with 17 significant digits (lossless for
doubles). No environment is consulted; everything comes in as flags.

Exit codes: 0 success or verified, 1 a verification found a violation
(scan, verify, strand), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .cerf import EvalConfig, erf, erfc
from .contour import fold_into_T, integrate_along_gamma, make_gamma
from .errors import AccuracyError, DomainError
from .quadrature import QuadConfig
from .region import (
    ANGLE_TOL_ULPS,
    SHORTCUT_X,
    VERIFY_TOLERANCE,
    GridMode,
    RandomMode,
    SamplePlan,
    Sector,
    SectorSpec,
    iter_verdicts,
    strand_sweep,
    summarize,
    verify_point,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _jnum(x) -> str:
    return "null" if x is None else _fmt(x)


def _jbool(x) -> str:
    return "null" if x is None else ("true" if x else "false")


def _eval_cfg(tol: float | None) -> EvalConfig:
    return EvalConfig() if tol is None else EvalConfig(target_abs_tol=tol)


def _config_header_lines(cfg: EvalConfig, qcfg: QuadConfig) -> list[str]:
    return [
        f"# eval_target_abs_tol = {_fmt(cfg.target_abs_tol)}",
        f"# eval_max_series_terms = {cfg.max_series_terms}",
        f"# eval_series_cf_switch_radius = {_fmt(cfg.series_cf_switch_radius)}",
        f"# quad_abs_tol = {_fmt(qcfg.abs_tol)}",
        f"# quad_rel_tol = {_fmt(qcfg.rel_tol)}",
        f"# quad_max_subdivisions = {qcfg.max_subdivisions}",
        f"# angle_tolerance_ulps = {ANGLE_TOL_ULPS}",
        f"# shortcut_abscissa = {_fmt(SHORTCUT_X)}",
    ]


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _cmd_eval(args) -> int:
    cfg = _eval_cfg(args.tol)
    fn = erf if args.fn == "erf" else erfc
    result = fn(complex(args.re, args.im), cfg)
    print(f"value_re = {_fmt(result.value.real)}")
    print(f"value_im = {_fmt(result.value.imag)}")
    print(f"abs_err_estimate = {_fmt(result.abs_err_estimate)}")
    print(f"method = {result.method.value}")
    return EXIT_OK


def _verdict_json(verdict, note: str | None = None) -> str:
    fields = [
        f'"z": {{"re": {_fmt(verdict.z.real)}, "im": {_fmt(verdict.z.imag)}}}',
        f'"re_erfc": {_fmt(verdict.re_erfc)}',
        f'"margin": {_fmt(verdict.margin)}',
        f'"strand_bound_value": {_jnum(verdict.strand_bound_value)}',
        f'"strand_ok": {_jbool(verdict.strand_ok)}',
        f'"method_note": "{verdict.method_note.value}"',
        f'"easy_part": {_jnum(verdict.easy_part)}',
        f'"real_part_leg2": {_jnum(verdict.real_part_leg2)}',
    ]
    if note is not None:
        fields.append(f'"note": "{note}"')
    return "{" + ", ".join(fields) + "}"


def _cmd_verify(args) -> int:
    z = complex(args.re, args.im)
    verdict = verify_point(z)
    note = "equality case: margin is zero only at the origin" if z == 0 else None
    print(_verdict_json(verdict, note))
    return EXIT_VIOLATION if verdict.margin < -args.tol else EXIT_OK


def _cmd_scan(args) -> int:
    if (args.nx is None) == (args.random is None):
        raise DomainError("choose exactly one of --nx/--ny or --random/--seed")
    if args.nx is not None:
        if args.ny is None:
            raise DomainError("--nx requires --ny")
        mode = GridMode(args.nx, args.ny)
        mode_desc = f"grid nx={args.nx} ny={args.ny}"
    else:
        mode = RandomMode(args.random, args.seed)
        mode_desc = f"random count={args.random} seed={args.seed}"
    plan = SamplePlan(
        box=(args.xmin, args.xmax, args.ymin, args.ymax),
        mode=mode,
        sector=SectorSpec(Sector(args.sector)),
    )
    cfg, qcfg = EvalConfig(), QuadConfig()
    verdicts = list(iter_verdicts(plan, cfg, qcfg))
    report = summarize(verdicts, args.tol)

    out, close = _open_out(args.out)
    try:
        header = [
            "# command = scan",
            f"# sector = {args.sector}",
            f"# box = {_fmt(args.xmin)} {_fmt(args.xmax)} {_fmt(args.ymin)} {_fmt(args.ymax)}",
            f"# mode = {mode_desc}",
            f"# tolerance = {_fmt(report.tolerance)}",
            *_config_header_lines(cfg, qcfg),
            f"# points_tested = {report.points_tested}",
            f"# empty_intersection = {str(report.empty_intersection).lower()}",
            f"# min_margin = {_fmt(report.min_margin) if report.points_tested else 'nan'}",
            f"# argmin_re = {_fmt(report.argmin.real) if report.argmin is not None else 'nan'}",
            f"# argmin_im = {_fmt(report.argmin.imag) if report.argmin is not None else 'nan'}",
            f"# violations = {len(report.violations)}",
        ]
        for line in header:
            print(line, file=out)
        writer = csv.writer(out)
        writer.writerow(["re", "im", "re_erfc", "margin", "method_note"])
        for v in verdicts:
            writer.writerow(
                [_fmt(v.z.real), _fmt(v.z.imag), _fmt(v.re_erfc), _fmt(v.margin), v.method_note.value]
            )
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _cmd_contour(args) -> int:
    fold = fold_into_T(complex(args.re, args.im))
    path = make_gamma(fold.point.real, fold.point.imag)
    dec = integrate_along_gamma(path)
    direct = erf(fold.point)
    disc = abs(dec.total - direct.value)
    print(f"# contour decomposition at folded point z = {_fmt(fold.point.real)} + {_fmt(fold.point.imag)}i "
          f"(conjugated = {str(fold.conjugated).lower()})")
    print(f"a = {_fmt(path.a)}")
    print(f"easy_part = {_fmt(dec.easy_part)}")
    print(f"real_part_leg2 = {_fmt(dec.real_part_leg2)}")
    print(f"imag_part_leg2 = {_fmt(dec.imag_part_leg2)}")
    print(f"total_re = {_fmt(dec.total.real)}")
    print(f"total_im = {_fmt(dec.total.imag)}")
    print(f"erf_re = {_fmt(direct.value.real)}")
    print(f"erf_im = {_fmt(direct.value.imag)}")
    print(f"discrepancy = {_fmt(disc)}")
    return EXIT_OK


def _cmd_strand(args) -> int:
    cfg = EvalConfig()
    rows = list(strand_sweep((args.xmin, args.xmax, args.ymin, args.ymax), args.nx, args.ny, cfg))
    min_slack = min((r.slack for r in rows), default=float("inf"))
    out, close = _open_out(args.out)
    try:
        header = [
            "# command = strand",
            f"# box = {_fmt(args.xmin)} {_fmt(args.xmax)} {_fmt(args.ymin)} {_fmt(args.ymax)}",
            f"# mode = grid nx={args.nx} ny={args.ny} (y = 0 rows skipped: bound undefined there)",
            *_config_header_lines(cfg, QuadConfig()),
            f"# points = {len(rows)}",
            f"# min_slack = {_fmt(min_slack) if rows else 'nan'}",
        ]
        for line in header:
            print(line, file=out)
        writer = csv.writer(out)
        writer.writerow(["x", "y", "modulus", "bound", "slack"])
        for r in rows:
            writer.writerow([_fmt(r.x), _fmt(r.y), _fmt(r.modulus), _fmt(r.bound), _fmt(r.slack)])
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if rows and min_slack <= 0.0 else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="erfsector",
        description="Evaluate erf/erfc, decompose the sector contour, and "
        "verify Re(erfc(z)) >= 1 on |Arg z| >= 3pi/4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate erf or erfc at one point")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--fn", choices=["erf", "erfc"], default="erf")
    p.add_argument("--tol", type=float, default=None, help="target absolute tolerance")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="verdict for one point of sector S (JSON)")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=VERIFY_TOLERANCE,
                   help="margin pass threshold (exit 1 below -tol)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="scan a box intersected with a sector (CSV)")
    p.add_argument("--sector", choices=["S", "T"], required=True)
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--ymin", type=float, required=True)
    p.add_argument("--ymax", type=float, required=True)
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--random", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="K")
    p.add_argument("--tol", type=float, default=VERIFY_TOLERANCE)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("contour", help="leg decomposition of the erf contour")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.set_defaults(func=_cmd_contour)

    p = sub.add_parser("strand", help="bound-vs-modulus sweep over a grid (CSV)")
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--ymin", type=float, required=True)
    p.add_argument("--ymax", type=float, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_strand)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass it through
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (DomainError, AccuracyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
