"""Command-line front end: evaluate the integral, tabulate it over a grid,
verify the identity chain, and probe the n -> infinity limit.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
domain error, 3 quadrature non-convergence (or an eval/table spread above
the pass threshold).  CSV and JSON payloads are stable machine formats;
``--quiet`` silences the human rendering and nothing else.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

from . import routes
from .quadrature import QuadratureConfig

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3

EVAL_FIELDS = (
    "n",
    "trig_form",
    "trigamma_form",
    "gamma_derivative_form",
    "quadrature_value",
    "quadrature_error",
    "spread",
)
VERIFY_FIELDS = ("subject", "max_abs_deviation", "tolerance", "pass", "worst_point")
LIMIT_FIELDS = ("n", "value", "residual", "residual_n2")

_DEFAULT_SPREAD_THRESHOLD = 1e-6


def _fmt17(value: float) -> str:
    # 17 significant digits round-trip any double exactly
    return format(float(value), ".17g")


def _fmt10(value: float) -> str:
    return format(float(value), ".10g")


def _write_csv(fields: Sequence[str], rows: Sequence[dict]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow(
            _fmt17(row[key]) if isinstance(row[key], float) else row[key]
            for key in fields
        )


def _quad_config(args: argparse.Namespace) -> QuadratureConfig:
    return QuadratureConfig(abs_tol=args.quad_tol, rel_tol=args.quad_tol)


def _row_dict(row: routes.EvaluationRow) -> dict:
    return {
        "n": row.n.n,
        "trig_form": row.trig_form,
        "trigamma_form": row.trigamma_form,
        "gamma_derivative_form": row.gamma_derivative_form,
        "quadrature_value": row.quadrature.value,
        "quadrature_error": row.quadrature.error_estimate,
        "spread": row.max_pairwise_spread,
    }


def _print_eval_human(row: routes.EvaluationRow, threshold: float) -> None:
    quad = row.quadrature
    print(f"I(n) for n = {_fmt10(row.n.n)}")
    print(f"  trig closed form       {_fmt10(row.trig_form)}")
    print(f"  trigamma closed form   {_fmt10(row.trigamma_form)}")
    print(f"  gamma derivative       {_fmt10(row.gamma_derivative_form)}")
    print(
        f"  quadrature             {_fmt10(quad.value)}"
        f"  (error estimate {quad.error_estimate:.3e},"
        f" {quad.evaluations} evaluations,"
        f" {'converged' if quad.converged else 'NOT converged'})"
    )
    verdict = "ok" if row.max_pairwise_spread <= threshold else "EXCEEDED"
    print(
        f"  max route spread       {row.max_pairwise_spread:.3e}"
        f"  [threshold {threshold:g}: {verdict}]"
    )


def _run_eval(args: argparse.Namespace) -> int:
    cfg = _quad_config(args)
    row = routes.evaluate_all_routes(args.n, cfg)
    threshold = _DEFAULT_SPREAD_THRESHOLD if args.tol is None else args.tol
    if args.fmt == "json":
        print(json.dumps(_row_dict(row)))
    elif args.fmt == "csv":
        _write_csv(EVAL_FIELDS, [_row_dict(row)])
    elif not args.quiet:
        _print_eval_human(row, threshold)
    if not row.quadrature.converged or row.max_pairwise_spread > threshold:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _grid(n_min: float, n_max: float, steps: int, spacing: str) -> list[float]:
    if not (n_min > 1.0 and n_max > n_min):
        raise ValueError(
            f"need 1 < min < max, got min={n_min!r}, max={n_max!r}"
        )
    if steps < 2:
        raise ValueError(f"need at least 2 steps, got {steps!r}")
    if spacing == "log":
        ratio = n_max / n_min
        return [n_min * ratio ** (i / (steps - 1)) for i in range(steps)]
    return [n_min + (n_max - n_min) * i / (steps - 1) for i in range(steps)]


def _run_table(args: argparse.Namespace) -> int:
    cfg = _quad_config(args)
    grid = _grid(args.min, args.max, args.steps, args.spacing)
    rows = [routes.evaluate_all_routes(n, cfg) for n in grid]
    dicts = [_row_dict(row) for row in rows]
    if args.fmt == "json":
        print(json.dumps(dicts))
    elif args.fmt == "csv":
        _write_csv(EVAL_FIELDS, dicts)
    elif not args.quiet:
        header = f"{'n':>14s} {'I(n)':>20s} {'spread':>12s}"
        print(header)
        for row in rows:
            print(
                f"{_fmt10(row.n.n):>14s} {_fmt10(row.trig_form):>20s}"
                f" {row.max_pairwise_spread:>12.3e}"
            )
    if any(not row.quadrature.converged for row in rows):
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _collect_reports(
    subject: str, cfg: QuadratureConfig, tol: float | None
) -> list[routes.VerificationReport]:
    reports = []
    if subject in ("lemma1", "all"):
        lemma1_tol = routes.DEFAULT_LEMMA1_TOL if tol is None else tol
        for m in (1, 2, 3):
            reports.append(routes.verify_lemma1(m, cfg=cfg, tol=lemma1_tol))
    if subject in ("lemma2", "all"):
        reports.append(
            routes.verify_lemma2(tol=routes.DEFAULT_LEMMA2_TOL if tol is None else tol)
        )
    if subject in ("lemma3", "all"):
        reports.append(
            routes.verify_lemma3(tol=routes.DEFAULT_LEMMA3_TOL if tol is None else tol)
        )
    if subject in ("theorem", "all"):
        reports.append(
            routes.verify_theorem(
                cfg=cfg, tol=routes.DEFAULT_THEOREM_TOL if tol is None else tol
            )
        )
    return reports


def _report_dict(report: routes.VerificationReport) -> dict:
    return {
        "subject": report.subject.value,
        "max_abs_deviation": report.max_abs_deviation,
        "tolerance": report.tolerance,
        "pass": report.passed,
        "worst_point": list(report.worst_point),
    }


def _run_verify(args: argparse.Namespace) -> int:
    cfg = _quad_config(args)
    reports = _collect_reports(args.subject, cfg, args.tol)
    if args.fmt == "json":
        print(json.dumps([_report_dict(r) for r in reports]))
    elif args.fmt == "csv":
        rows = []
        for r in reports:
            d = _report_dict(r)
            d["pass"] = "true" if r.passed else "false"
            d["worst_point"] = ";".join(_fmt17(p) for p in r.worst_point)
            rows.append(d)
        _write_csv(VERIFY_FIELDS, rows)
    elif not args.quiet:
        for r in reports:
            state = "PASS" if r.passed else "FAIL"
            point = ", ".join(_fmt10(p) for p in r.worst_point)
            print(
                f"{r.subject.value:12s} {state}"
                f"  max deviation {r.max_abs_deviation:.3e}"
                f" (tol {r.tolerance:g}) worst at ({point})"
            )
    if any(math.isinf(r.max_abs_deviation) for r in reports):
        return EXIT_NO_CONVERGENCE
    if any(not r.passed for r in reports):
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _parse_n_list(text: str) -> list[float]:
    try:
        values = [float(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise ValueError(f"could not parse n list {text!r}") from None
    if not values:
        raise ValueError("n list is empty")
    return values


def _run_limit(args: argparse.Namespace) -> int:
    probe = routes.limit_probe(_parse_n_list(args.n_list))
    rows = [
        {"n": n, "value": value, "residual": residual, "residual_n2": residual * n * n}
        for n, value, residual in probe
    ]
    if args.fmt == "json":
        print(json.dumps(rows))
    elif args.fmt == "csv":
        _write_csv(LIMIT_FIELDS, rows)
    elif not args.quiet:
        print(f"{'n':>14s} {'I(n)':>20s} {'I(n)+1':>14s} {'(I(n)+1)*n^2':>14s}")
        for row in rows:
            print(
                f"{_fmt10(row['n']):>14s} {_fmt10(row['value']):>20s}"
                f" {row['residual']:>14.6e} {row['residual_n2']:>14.10f}"
            )
    residuals = [row["residual"] for row in rows]
    decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))
    return EXIT_OK if decreasing else EXIT_VERIFICATION_FAILED


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        dest="fmt",
        choices=("human", "csv", "json"),
        default="human",
        help="output format (default: human)",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress human-readable prose"
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="pass/fail threshold; never changes quadrature internals",
    )
    parser.add_argument(
        "--quad-tol",
        dest="quad_tol",
        type=float,
        default=1e-10,
        help="absolute and relative tolerance for the quadrature engine",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logint",
        description=(
            "Evaluate I(n) = integral of ln(x)/(x^n + 1) over (0, inf) by four "
            "independent routes and verify the identity chain behind the closed form."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate all routes at one n")
    p_eval.add_argument("--n", type=float, required=True, help="exponent, must exceed 1")
    _add_common_flags(p_eval)
    p_eval.set_defaults(handler=_run_eval)

    p_table = sub.add_parser("table", help="tabulate all routes over an n grid")
    p_table.add_argument("--min", type=float, required=True)
    p_table.add_argument("--max", type=float, required=True)
    p_table.add_argument("--steps", type=int, required=True)
    p_table.add_argument("--spacing", choices=("linear", "log"), default="linear")
    _add_common_flags(p_table)
    p_table.set_defaults(handler=_run_table)

    p_verify = sub.add_parser("verify", help="re-run the identity checks")
    p_verify.add_argument(
        "--subject",
        choices=("lemma1", "lemma2", "lemma3", "theorem", "all"),
        default="all",
    )
    _add_common_flags(p_verify)
    p_verify.set_defaults(handler=_run_verify)

    p_limit = sub.add_parser("limit", help="probe the n -> infinity limit")
    p_limit.add_argument(
        "--n-list",
        dest="n_list",
        required=True,
        help="comma-separated, strictly ascending exponents",
    )
    _add_common_flags(p_limit)
    p_limit.set_defaults(handler=_run_limit)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
