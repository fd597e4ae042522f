"""Command line front end.

Subcommands:

    series             graded dimensions through a given order
    reconstruct        the Poincare series as an exact rational function
    degree             degree and half-degree of the covariant algebra
    invariants-degree  closed-form degree constant of the invariant subalgebra
    integral           sinc-power integral, closed form vs quadrature
    asymptotics        scaled degree and integral against their limits
    verify             per-d verification report (oracle, Laurent, Gorenstein,
                       integral identity)
    report             CSV tables plus rendered figures in a directory

Output is JSON (default, compact separators) or CSV, written to standard
output or to --out.  Every rational is serialized exactly as "p/q" (or
"p"), every float by its shortest round-trip repr, so identical argv
yields byte-identical output.  Exit codes: 0 success, 1 usage error,
2 verification failure, 3 reconstruction failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Sequence

from .closed_forms import (
    c_constant,
    deg_covariants,
    deg_invariants,
    degree_pair,
    psi_covariants,
    wolstenholme_integral,
)
from .engine import (
    ReconstructionError,
    covariant_series,
    gorenstein_check,
    laurent_at_one,
    poincare_series,
)
from .numerics import (
    AccuracyError,
    asymptotic_scan,
    deg_asymptotic_ratio,
    integral_sinc_pow,
)
from .oracle import dim_covariants

__all__ = ["CheckResult", "VerificationReport", "run", "main"]

_VERIFY_ORDER = 30
_REPORT_LADDER = (2, 4, 8, 16, 32, 64, 128, 256, 512)


class CliUsageError(Exception):
    """Bad flag combination or out-of-domain argument."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class VerificationReport:
    d: int
    checks: tuple[CheckResult, ...]
    overall: bool
    notes: tuple[str, ...]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this front end reserves 2 for
    verification failures, so remap to 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dump_json(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _resolve_range(args: argparse.Namespace, low: int) -> list[int]:
    """Expand --d / --max-d into the list of degrees to process."""
    d = getattr(args, "d", None)
    max_d = getattr(args, "max_d", None)
    if d is not None and max_d is not None:
        raise CliUsageError("give --d or --max-d, not both")
    if d is not None:
        if d < low:
            raise CliUsageError(f"this subcommand needs d >= {low}")
        return [d]
    if max_d is not None:
        if max_d < low:
            raise CliUsageError(f"this subcommand needs max-d >= {low}")
        return list(range(low, max_d + 1))
    raise CliUsageError("one of --d / --max-d is required")


def _cmd_series(args: argparse.Namespace) -> tuple[int, str]:
    if args.d < 1:
        raise CliUsageError("this subcommand needs d >= 1")
    if args.order < 0:
        raise CliUsageError("order must be non-negative")
    series = covariant_series(args.d, args.order)
    coeffs = [str(c) for c in series.coeffs]
    if args.format == "csv":
        payload = _dump_csv(("i", "coeff"), list(enumerate(coeffs)))
    else:
        payload = _dump_json({"d": args.d, "order": args.order, "coeffs": coeffs})
    return 0, payload


def _cmd_reconstruct(args: argparse.Namespace) -> tuple[int, str]:
    if args.d < 1:
        raise CliUsageError("this subcommand needs d >= 1")
    rational = poincare_series(args.d)
    num, den = rational.numerator, rational.denominator
    if args.format == "csv":
        width = max(num.degree, den.degree) + 1
        rows = [
            (k, str(num.coefficient(k)), str(den.coefficient(k)))
            for k in range(width)
        ]
        payload = _dump_csv(("k", "numerator", "denominator"), rows)
    else:
        payload = _dump_json(
            {
                "d": args.d,
                "q": den.degree - num.degree,
                "numerator": num.to_strings(),
                "denominator": den.to_strings(),
            }
        )
    return 0, payload


def _cmd_degree(args: argparse.Namespace) -> tuple[int, str]:
    pairs = [degree_pair(d) for d in _resolve_range(args, low=2)]
    items = [
        {"d": pair.d, "deg": str(pair.degree), "psi": str(pair.psi)}
        for pair in pairs
    ]
    if args.format == "csv":
        payload = _dump_csv(("d", "deg", "psi"), [(r["d"], r["deg"], r["psi"]) for r in items])
    elif args.d is not None:
        payload = _dump_json(items[0])
    else:
        payload = _dump_json({"rows": items})
    return 0, payload


def _cmd_invariants_degree(args: argparse.Namespace) -> tuple[int, str]:
    ds = _resolve_range(args, low=3)
    items = [{"d": d, "deg": str(deg_invariants(d))} for d in ds]
    if args.format == "csv":
        payload = _dump_csv(("d", "deg"), [(r["d"], r["deg"]) for r in items])
    elif args.d is not None:
        payload = _dump_json(items[0])
    else:
        payload = _dump_json({"rows": items})
    return 0, payload


def _cmd_integral(args: argparse.Namespace) -> tuple[int, str]:
    ds = _resolve_range(args, low=1)
    rows = []
    for d in ds:
        closed = wolstenholme_integral(d, d)
        value = integral_sinc_pow(d, args.tol)
        rows.append(
            (d, str(closed), repr(float(closed)), repr(value), repr(abs(value - float(closed))))
        )
    header = ("d", "closed_form", "closed_value", "quadrature", "abs_difference")
    if args.format == "csv":
        payload = _dump_csv(header, rows)
    else:
        items = [dict(zip(header, row)) for row in rows]
        payload = _dump_json(items[0] if args.d is not None else {"rows": items})
    return 0, payload


def _cmd_asymptotics(args: argparse.Namespace) -> tuple[int, str]:
    ds = _resolve_range(args, low=2)
    integral_samples = asymptotic_scan(ds)
    rows = []
    for sample in integral_samples:
        ratio = deg_asymptotic_ratio(sample.d)
        rows.append(
            (
                sample.d,
                repr(sample.value),
                repr(sample.rel_error),
                repr(ratio.value),
                repr(ratio.rel_error),
            )
        )
    header = ("d", "scaled_integral", "integral_rel_error", "scaled_degree", "degree_rel_error")
    if args.format == "csv":
        payload = _dump_csv(header, rows)
    else:
        payload = _dump_json(
            {
                "integral_target": repr(integral_samples[0].target),
                "degree_target": repr(deg_asymptotic_ratio(2).target),
                "rows": [dict(zip(header, row)) for row in rows],
            }
        )
    return 0, payload


def _verify_one(d: int) -> VerificationReport:
    checks: list[CheckResult] = []
    notes: list[str] = []

    series = covariant_series(d, _VERIFY_ORDER)
    total = _VERIFY_ORDER + 1
    matches = sum(
        1 for i in range(total) if series.coefficient(i) == dim_covariants(d, i)
    )
    checks.append(
        CheckResult("oracle-match", matches == total, f"{total}/{total}", f"{matches}/{total}")
    )

    rational = poincare_series(d)
    head = laurent_at_one(rational, 2)
    if d == 1:
        notes.append("d=1 degenerate")
        expected = f"pole 1, deg {deg_covariants(1)}"
        actual = f"pole {head.pole_order}, deg {head.coefficients[0]}"
    else:
        expected = f"pole {d}, deg {deg_covariants(d)}, psi {psi_covariants(d)}"
        actual = (
            f"pole {head.pole_order}, deg {head.coefficients[0]}, psi {head.coefficients[1]}"
        )
    checks.append(CheckResult("laurent-head", expected == actual, expected, actual))

    gorenstein = gorenstein_check(rational, d)
    # the q = d + 1 degree gap starts at d = 2; the d = 1 series has gap 1
    wanted_q = 1 if gorenstein.degenerate else gorenstein.expected_q
    expected = f"q={wanted_q}, equation holds"
    held = "holds" if gorenstein.equation_holds else "fails"
    actual = f"q={gorenstein.q}, equation {held}"
    checks.append(
        CheckResult(
            "gorenstein",
            gorenstein.q == wanted_q and gorenstein.equation_holds,
            expected,
            actual,
        )
    )

    target = c_constant(d) / (2 * factorial(d - 1))
    value = wolstenholme_integral(d, d).coefficient
    checks.append(
        CheckResult("wolstenholme", value == target, f"({target})*pi", f"({value})*pi")
    )

    return VerificationReport(
        d=d,
        checks=tuple(checks),
        overall=all(c.passed for c in checks),
        notes=tuple(notes),
    )


def _cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    if args.all and args.max_d is None:
        raise CliUsageError("--all needs --max-d")
    ds = _resolve_range(args, low=1)
    reports = [_verify_one(d) for d in ds]
    if args.format == "csv":
        rows: list[tuple[object, ...]] = []
        for report in reports:
            for check in report.checks:
                rows.append((report.d, check.name, check.status, check.expected, check.actual))
            for note in report.notes:
                rows.append((report.d, "note", "info", "", note))
        payload = _dump_csv(("d", "name", "status", "expected", "actual"), rows)
    else:
        payload = _dump_json(
            {
                "reports": [
                    {
                        "d": report.d,
                        "overall": report.overall,
                        "notes": list(report.notes),
                        "checks": [
                            {
                                "name": c.name,
                                "status": c.status,
                                "expected": c.expected,
                                "actual": c.actual,
                            }
                            for c in report.checks
                        ],
                    }
                    for report in reports
                ]
            }
        )
    code = 0 if all(report.overall for report in reports) else 2
    return code, payload


def _cmd_report(args: argparse.Namespace) -> tuple[int, str]:
    from . import figures

    if args.max_d < 2:
        raise CliUsageError("this subcommand needs max-d >= 2")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    degree_rows = [
        (d, str(deg_covariants(d)), str(psi_covariants(d)))
        for d in range(2, args.max_d + 1)
    ]
    (out / "degrees.csv").write_text(
        _dump_csv(("d", "deg", "psi"), degree_rows), encoding="utf-8"
    )

    ladder = list(_REPORT_LADDER)
    samples = asymptotic_scan(ladder)
    ratios = [deg_asymptotic_ratio(d) for d in ladder]
    scaling_rows = [
        (s.d, repr(s.value), repr(s.rel_error), repr(r.value), repr(r.rel_error))
        for s, r in zip(samples, ratios)
    ]
    (out / "scaling.csv").write_text(
        _dump_csv(
            ("d", "scaled_integral", "integral_rel_error", "scaled_degree", "degree_rel_error"),
            scaling_rows,
        ),
        encoding="utf-8",
    )

    dim_rows = []
    dim_lines = []
    for d in range(2, min(args.max_d, 6) + 1):
        dims = [int(c) for c in covariant_series(d, _VERIFY_ORDER).coeffs]
        dim_lines.append((d, dims))
        dim_rows.extend((d, i, dim) for i, dim in enumerate(dims))
    (out / "dimensions.csv").write_text(
        _dump_csv(("d", "i", "dim"), dim_rows), encoding="utf-8"
    )

    figures.scaling_figure(samples, out / "scaling.png")
    figures.degree_decay_figure(
        [(d, float(deg_covariants(d))) for d in ladder], out / "degree_decay.png"
    )
    figures.dimension_growth_figure(dim_lines, out / "dimensions.png")

    names = sorted(p.name for p in out.iterdir() if p.is_file())
    return 0, _dump_json({"out": args.out, "files": names})


def _add_common(sub: argparse.ArgumentParser, *, with_range: bool, with_tol: bool = False) -> None:
    sub.add_argument("--d", type=int, default=None, help="form degree")
    if with_range:
        sub.add_argument("--max-d", type=int, default=None, help="process d up to this value")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    if with_tol:
        sub.add_argument("--tol", type=float, default=1e-9, help="absolute quadrature tolerance")
    sub.add_argument("--out", type=str, default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="covariants",
        description="Exact Poincare series of the covariant algebra of a binary form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="graded dimensions through --order")
    _add_common(p, with_range=False)
    p.add_argument("--order", type=int, default=30, help="highest grade to report")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("reconstruct", help="exact rational form of the series")
    _add_common(p, with_range=False)
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("degree", help="degree and half-degree, exact rationals")
    _add_common(p, with_range=True)
    p.set_defaults(handler=_cmd_degree)

    p = sub.add_parser("invariants-degree", help="degree constant of the invariant subalgebra")
    _add_common(p, with_range=True)
    p.set_defaults(handler=_cmd_invariants_degree)

    p = sub.add_parser("integral", help="sinc-power integral, closed form vs quadrature")
    _add_common(p, with_range=True, with_tol=True)
    p.set_defaults(handler=_cmd_integral)

    p = sub.add_parser("asymptotics", help="scaled degree and integral vs their limits")
    _add_common(p, with_range=True)
    p.set_defaults(handler=_cmd_asymptotics)

    p = sub.add_parser("verify", help="per-d verification report")
    _add_common(p, with_range=True)
    p.add_argument("--all", action="store_true", help="verify every d up to --max-d")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("report", help="CSV tables and figures in a directory")
    p.add_argument("--max-d", type=int, default=10)
    p.add_argument("--out", type=str, default="report", help="output directory")
    p.set_defaults(handler=_cmd_report)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload = args.handler(args)
    except CliUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ReconstructionError as exc:
        print(f"reconstruction failed: {exc}", file=sys.stderr)
        return 3
    except AccuracyError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    if args.out is not None and args.command != "report":
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return code


def main() -> None:
    sys.exit(run())
