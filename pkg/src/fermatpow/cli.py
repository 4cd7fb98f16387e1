"""Command-line interface.

Subcommands: ``alpha`` (least generating degree of one symbolic power),
``table`` (the whole alpha grid plus Waldschmidt running infima), ``contain``
(containment certificates), ``witness`` (explicit member verification) and
``points`` (the interpolation oracle, on Fermat or user-supplied
configurations).

Exit codes: 0 success/holds, 1 verified non-containment or mismatch with the
predicted value on explicitly requested checks, 2 usage error, 3
internal error or timeout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .fermat import (
    FatPointScheme,
    PointFileError,
    fermat_points,
    load_point_file,
    predicted_alpha,
    symbolic_power,
    witness,
    witness_component_report,
)
from .groebner import GBTimeout, set_cache_dir
from .interpolation import InterpolationCapError, alpha_interp, fatpoint_dim
from .invariants import (
    OracleDisagreement,
    alpha_of,
    containment_check,
    invariant_report,
    waldschmidt_table,
)
from .textio import render_poly, render_rational

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit(text: str, out) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_alpha(args, out=None) -> int:
    out = out or sys.stdout
    try:
        report = invariant_report(args.n, args.m, args.method)
    except OracleDisagreement as exc:
        _emit(
            "oracle disagreement:\n"
            f"  groebner      alpha = {exc.groebner_value}\n"
            f"  interpolation alpha = {exc.interpolation_value}",
            sys.stderr,
        )
        return EXIT_INTERNAL
    if args.format == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2), out)
    else:
        _emit(f"n={args.n} m={args.m} alpha={report.alpha} method={report.alpha_method}", out)
    return EXIT_OK


def _table_cell(task) -> dict:
    n, m, budget, cache_dir = task
    if cache_dir:
        os.environ["FERMAT_CACHE_DIR"] = cache_dir
        set_cache_dir(cache_dir)
    started = time.monotonic()
    deadline = started + budget if budget else None
    cell = {
        "n": n,
        "m": m,
        "alpha": None,
        "predicted": predicted_alpha(n, m),
        "match": "skipped",
        "method": "groebner",
    }
    try:
        a = alpha_of(n, m, "groebner", deadline=deadline)
    except GBTimeout:
        cell["seconds"] = round(time.monotonic() - started, 3)
        return cell
    cell["alpha"] = a
    cell["match"] = "true" if a == cell["predicted"] else "false"
    cell["seconds"] = round(time.monotonic() - started, 3)
    return cell


def cmd_table(args, out=None) -> int:
    out = out or sys.stdout
    tasks = [
        (n, m, args.cell_budget, os.environ.get("FERMAT_CACHE_DIR"))
        for n in range(args.min_n, args.max_n + 1)
        for m in range(1, args.max_m + 1)
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            cells = list(pool.map(_table_cell, tasks))
    else:
        cells = [_table_cell(t) for t in tasks]

    waldschmidt = []
    for n in range(args.min_n, args.max_n + 1):
        ratios = [
            (c["m"], c["alpha"]) for c in cells if c["n"] == n and c["alpha"] is not None
        ]
        if not ratios:
            continue
        sample = waldschmidt_table(n, max(m for m, _ in ratios))
        waldschmidt.append(
            {
                "n": n,
                "inf_so_far": render_rational(sample.inf_so_far),
                "expected": render_rational(sample.expected),
            }
        )

    sink = open(args.out, "w", encoding="utf-8") if args.out != "-" else out
    try:
        if args.format == "csv":
            sink.write("n,m,alpha,predicted,match,method,seconds\n")
            for c in cells:
                alpha_text = "" if c["alpha"] is None else str(c["alpha"])
                sink.write(
                    f"{c['n']},{c['m']},{alpha_text},{c['predicted']},"
                    f"{c['match']},{c['method']},{c['seconds']}\n"
                )
        elif args.format == "json":
            payload = {
                "cells": [
                    {k: c[k] for k in ("n", "m", "alpha", "predicted", "match", "method")}
                    for c in cells
                ],
                "waldschmidt": waldschmidt,
            }
            sink.write(json.dumps(payload, indent=2) + "\n")
        else:
            for c in cells:
                alpha_text = "?" if c["alpha"] is None else str(c["alpha"])
                sink.write(
                    f"n={c['n']} m={c['m']} alpha={alpha_text} "
                    f"predicted={c['predicted']} match={c['match']}\n"
                )
            for wrow in waldschmidt:
                sink.write(
                    f"waldschmidt n={wrow['n']}: inf {wrow['inf_so_far']} "
                    f"(expected {wrow['expected']})\n"
                )
    finally:
        if sink is not out:
            sink.close()
    if any(c["match"] == "skipped" for c in cells):
        return EXIT_INTERNAL
    if any(c["match"] == "false" for c in cells):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_contain(args, out=None) -> int:
    out = out or sys.stdout
    cert = containment_check(args.n, args.m, args.r, args.a)
    if args.format == "json":
        _emit(json.dumps(cert.to_json_dict(), indent=2), out)
    else:
        target = f"I_{args.n}^{args.r}" if args.a == 0 else f"m^{args.a} I_{args.n}^{args.r}"
        _emit(f"I_{args.n}^({args.m}) subset of {target}: {str(cert.holds).lower()}", out)
        if not cert.holds:
            _emit(f"failing generator: {render_poly(cert.failing_generator)}", out)
        elif cert.degree_criterion_used:
            _emit("degree criterion applies (alpha >= a + omega of the power)", out)
    return EXIT_OK if cert.holds else EXIT_MISMATCH


def cmd_witness(args, out=None) -> int:
    out = out or sys.stdout
    w = witness(args.n, args.m)
    if w is None:
        _emit(
            f"no closed-form witness covers (n={args.n}, m={args.m}); reporting alpha instead",
            out,
        )
        report = invariant_report(args.n, args.m, "groebner")
        if args.format == "json":
            _emit(json.dumps(report.to_json_dict(), indent=2), out)
        else:
            _emit(f"n={args.n} m={args.m} alpha={report.alpha} method=groebner", out)
        return EXIT_OK
    report = witness_component_report(args.n, args.m)
    verified = (
        report["in_pencil_power"]
        and all(report["in_coordinate_powers"].values())
        and report["degree"] == report["expected_degree"]
    )
    if args.format == "json":
        payload = {
            "n": args.n,
            "m": args.m,
            "witness": render_poly(report["witness"]),
            "degree": report["degree"],
            "expected_degree": report["expected_degree"],
            "in_pencil_power": report["in_pencil_power"],
            "in_coordinate_powers": report["in_coordinate_powers"],
            "verified": verified,
        }
        _emit(json.dumps(payload, indent=2), out)
    else:
        _emit(f"witness n={args.n} m={args.m}: {render_poly(report['witness'])}", out)
        _emit(f"degree {report['degree']} (expected {report['expected_degree']})", out)
        _emit(f"member of pencil power: {str(report['in_pencil_power']).lower()}", out)
        for name, ok in report["in_coordinate_powers"].items():
            _emit(f"member of ({name[0]},{name[1]})^{args.m}: {str(ok).lower()}", out)
        _emit(f"verified: {str(verified).lower()}", out)
    return EXIT_OK if verified else EXIT_MISMATCH


def cmd_points(args, out=None) -> int:
    out = out or sys.stdout
    if args.fermat is not None:
        config = fermat_points(args.fermat)
        source = {"fermat": args.fermat}
    else:
        try:
            config = load_point_file(args.file)
        except PointFileError as exc:
            _emit(f"{args.file}: {exc}", sys.stderr)
            return EXIT_USAGE
        source = {"file": args.file}
    scheme = FatPointScheme(config, args.m)
    trace: list | None = [] if args.trace else None
    if args.t is not None:
        dim = fatpoint_dim(scheme, args.t, strict=args.strict)
        result = {"t": args.t, "dimension": dim}
    else:
        try:
            a = alpha_interp(scheme, cap=args.cap, trace=trace, strict=args.strict)
        except InterpolationCapError as exc:
            _emit(f"scan cap exceeded: {exc}", sys.stderr)
            return EXIT_INTERNAL
        result = {"alpha": a}
    if args.format == "json":
        payload = dict(source)
        payload.update({"points": len(config), "m": args.m})
        payload.update(result)
        if trace is not None:
            payload["trace"] = [
                {"t": t, "rows": rows, "cols": cols, "rank": rank, "kernel": kern}
                for t, rows, cols, rank, kern in trace
            ]
        _emit(json.dumps(payload, indent=2), out)
    else:
        if trace is not None:
            for t, rows, cols, rank, kern in trace:
                _emit(f"t={t} rows={rows} cols={cols} rank={rank} kernel={kern}", out)
        label = "alpha" if "alpha" in result else f"dim[t={args.t}]"
        value = result.get("alpha", result.get("dimension"))
        _emit(f"points={len(config)} m={args.m} {label}={value}", out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermatpow",
        description="Exact symbolic-power invariants of Fermat point configurations.",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="Groebner cache directory (FERMAT_CACHE_DIR overrides the default)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_alpha = sub.add_parser("alpha", help="least degree in one symbolic power")
    p_alpha.add_argument("--n", type=int, required=True)
    p_alpha.add_argument("--m", type=int, required=True)
    p_alpha.add_argument(
        "--method", choices=("groebner", "interpolation", "both"), default="groebner"
    )
    p_alpha.add_argument("--format", choices=("text", "json"), default="text")
    p_alpha.set_defaults(func=cmd_alpha)

    p_table = sub.add_parser("table", help="alpha grid with predictions and match flags")
    p_table.add_argument("--min-n", type=int, default=2)
    p_table.add_argument("--max-n", type=int, default=3)
    p_table.add_argument("--max-m", type=int, default=6)
    p_table.add_argument("--out", default="-", help="output path ('-' = stdout)")
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_table.add_argument("--workers", type=int, default=1)
    p_table.add_argument(
        "--cell-budget", type=float, default=300.0, help="per-cell wall-clock budget in seconds"
    )
    p_table.set_defaults(func=cmd_table)

    p_contain = sub.add_parser("contain", help="containment certificate I^(m) in m^a I^r")
    p_contain.add_argument("--n", type=int, required=True)
    p_contain.add_argument("--m", type=int, required=True)
    p_contain.add_argument("--r", type=int, required=True)
    p_contain.add_argument("--a", type=int, default=0)
    p_contain.add_argument("--format", choices=("text", "json"), default="text")
    p_contain.set_defaults(func=cmd_contain)

    p_witness = sub.add_parser("witness", help="verify an explicit symbolic-power member")
    p_witness.add_argument("--n", type=int, required=True)
    p_witness.add_argument("--m", type=int, required=True)
    p_witness.add_argument("--format", choices=("text", "json"), default="text")
    p_witness.set_defaults(func=cmd_witness)

    p_points = sub.add_parser("points", help="interpolation oracle on a point configuration")
    group = p_points.add_mutually_exclusive_group(required=True)
    group.add_argument("--fermat", type=int, help="use the Fermat configuration for this n")
    group.add_argument("--file", help="point-configuration file")
    p_points.add_argument("--m", type=int, required=True, help="uniform multiplicity")
    p_points.add_argument("--t", type=int, default=None, help="report one graded dimension")
    p_points.add_argument("--cap", type=int, default=None, help="scan cap for alpha")
    p_points.add_argument("--strict", action="store_true", help="use all derivative orders < m")
    p_points.add_argument("--trace", action="store_true", help="print per-degree rank lines")
    p_points.add_argument("--format", choices=("text", "json"), default="text")
    p_points.set_defaults(func=cmd_points)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ["FERMAT_CACHE_DIR"] = args.cache_dir
        set_cache_dir(args.cache_dir)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GBTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
