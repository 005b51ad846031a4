"""``zeta-forge`` command line.

Exit codes: 0 success, 1 verification failed, 2 bad arguments,
3 zeta routes disagreed, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from . import reflection as rl
from . import series as sl
from .exact import format_rational
from .reports import GridReport
from .sequences import (
    bernoulli_recurrence,
    bernoulli_table_from_tangent,
    cotangent_numbers,
    tangent_numbers,
)
from .zeta import (
    RouteDisagreementError,
    ZetaValue,
    polygamma_half_exact,
    zeta_validated,
    zeta_via_bernoulli,
    zeta_via_cotangent,
    zeta_via_self_recurrence,
    zeta_via_tangent,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ROUTES, EXIT_IO = 0, 1, 2, 3, 4

ZETA_ROUTES: dict[str, Callable[[int], ZetaValue]] = {
    "tangent": zeta_via_tangent,
    "cotangent": zeta_via_cotangent,
    "recurrence": zeta_via_self_recurrence,
    "bernoulli": zeta_via_bernoulli,
    "all": zeta_validated,
}

DEFAULT_THRESHOLDS = {
    "verify-series": 1e-8,
    "verify-reflection": 1e-5,
    "verify-pv": 1e-8,
    "verify-plemelj": 0.05,
    "verify-ode": 1e-4,
    "verify-fubini": 1e-2,
}


class UsageError(Exception):
    pass


def decimal(value: float) -> str:
    return format(value, ".15g")


def _float_list(text: str) -> list[float]:
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _grid(text: str) -> list[float]:
    try:
        return rl.grid_from_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


# -- exact subcommands -------------------------------------------------------


def _print_table(table, fmt: str, out) -> None:
    if fmt == "json":
        print(table.to_json(), file=out)
        return
    for n, v in sorted(table.values.items()):
        text = format_rational(v) if fmt == "exact" else decimal(float(v))
        print(f"{n}\t{text}", file=out)


def cmd_tangent(args, out) -> int:
    _print_table(tangent_numbers(args.max_index), args.format, out)
    return EXIT_OK


def cmd_cotangent(args, out) -> int:
    _print_table(cotangent_numbers(args.max_index), args.format, out)
    return EXIT_OK


def cmd_bernoulli(args, out) -> int:
    if args.max_index < 2:
        raise UsageError("bernoulli needs --max-index >= 2")
    from_tangent = bernoulli_table_from_tangent(args.max_index)
    if args.route == "tangent":
        table = from_tangent
    else:
        table = bernoulli_recurrence(args.max_index // 2)
        if args.route == "all":
            for n, v in table.values.items():
                if from_tangent[n] != v:
                    raise RouteDisagreementError(
                        f"B_{n}: recurrence {format_rational(v)} vs tangent {format_rational(from_tangent[n])}"
                    )
            table = from_tangent
    _print_table(table, args.format, out)
    return EXIT_OK


def cmd_zeta(args, out) -> int:
    value = ZETA_ROUTES[args.route](args.k)
    if args.format == "json":
        print(json.dumps(value.to_dict(routes_agreed=args.route == "all")), file=out)
    elif args.format == "decimal":
        print(decimal(value.to_float()), file=out)
    else:
        print(str(value), file=out)
    return EXIT_OK


def cmd_polygamma_half(args, out) -> int:
    mono = polygamma_half_exact(args.k)
    if args.format == "json":
        print(json.dumps({"k": args.k, "order": 2 * args.k - 1,
                          "coeff": format_rational(mono.coeff), "pi_power": mono.pi_power}), file=out)
    elif args.format == "decimal":
        print(decimal(mono.to_float()), file=out)
    else:
        print(str(mono), file=out)
    return EXIT_OK


# -- series subcommands ------------------------------------------------------


def _print_estimate(est: sl.SeriesEstimate, fmt: str, out) -> None:
    if fmt == "json":
        print(est.to_json(), file=out)
    else:
        print(f"{decimal(est.value_estimate)}  bracket [{decimal(est.lower)}, {decimal(est.upper)}]"
              f"  terms {est.terms_used}", file=out)


def cmd_force(args, out) -> int:
    _print_estimate(sl.coulomb_force(args.x, args.terms), args.format, out)
    return EXIT_OK


def cmd_potential(args, out) -> int:
    _print_estimate(sl.regularized_potential(args.x, args.terms), args.format, out)
    return EXIT_OK


# -- verification subcommands ------------------------------------------------


def _report(report: GridReport, threshold: float, out, ok: bool = True) -> int:
    data = report.to_dict()
    data["threshold"] = threshold
    passed = ok and report.passes(threshold)
    data["passed"] = passed
    print(json.dumps(data), file=out)
    return EXIT_OK if passed else EXIT_FAIL


def _strictly_decreasing(values: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def cmd_verify_series(args, out) -> int:
    ks = list(range(1, args.k_max + 1))
    residuals, inside = [], []
    for k in ks:
        est = sl.partial_zeta_sum(k, args.terms or sl.default_terms(k))
        exact = zeta_validated(k).to_float()
        residuals.append(abs(est.value_estimate - exact))
        inside.append(est.contains(exact))
    report = GridReport.build(ks, residuals, bracket_contains_exact=inside)
    return _report(report, args.threshold, out, ok=all(inside))


def cmd_verify_reflection(args, out) -> int:
    return _report(sl.reflection_check(args.k, args.grid, args.terms), args.threshold, out)


def cmd_verify_pv(args, out) -> int:
    closed = rl.reflection_closed_form_check(args.grid)
    agree = rl.representation_check(args.grid)
    residuals = [max(a, b) for a, b in zip(closed.residuals, agree.residuals)]
    report = GridReport.build(args.grid, residuals,
                              closed_form_residuals=list(closed.residuals),
                              representation_residuals=list(agree.residuals))
    return _report(report, args.threshold, out)


def cmd_verify_plemelj(args, out) -> int:
    eps = sorted(args.eps_list, reverse=True)
    final, sweeps, monotone = [], {}, True
    for x in args.x_list:
        sweep = rl.plemelj_sweep(x, eps, args.sign)
        imag = sweep.extra["imag_residuals"]
        sweeps[str(x)] = imag
        monotone &= _strictly_decreasing(imag)
        final.append(imag[-1])
    report = GridReport.build(args.x_list, final, eps=eps, sign=args.sign,
                              imag_residual_sweeps=sweeps, monotone=monotone)
    return _report(report, args.threshold, out, ok=monotone)


def cmd_verify_ode(args, out) -> int:
    return _report(rl.ode_residual(args.grid, args.h), args.threshold, out)


def cmd_verify_fubini(args, out) -> int:
    eps = sorted(args.eps_list, reverse=True)
    final, sweeps, monotone = [], {}, True
    for y in args.y_list:
        sweep = rl.fubini_inner_check(y, eps)
        sweeps[str(y)] = list(sweep.residuals)
        monotone &= _strictly_decreasing(sweep.residuals)
        final.append(sweep.residuals[-1])
    report = GridReport.build(args.y_list, final, eps=eps, residual_sweeps=sweeps, monotone=monotone)
    return _report(report, args.threshold, out, ok=monotone)


# -- table -------------------------------------------------------------------

TABLE_COLUMNS = ("k", "2k", "coeff", "zeta_exact", "decimal", "T_2k-1", "B_2k")


def table_rows(max_k: int) -> list[tuple[str, ...]]:
    tangent = tangent_numbers(2 * max_k - 1)
    bern = bernoulli_table_from_tangent(2 * max_k)
    rows = []
    for k in range(1, max_k + 1):
        value = zeta_validated(k)
        rows.append((
            str(k),
            str(2 * k),
            format_rational(value.coeff),
            str(value),
            decimal(value.to_float()),
            format_rational(tangent[2 * k - 1]),
            format_rational(bern[2 * k]),
        ))
    return rows


def emit_table(max_k: int, fmt: str, out) -> None:
    if max_k < 1:
        raise UsageError("table needs --max-k >= 1")
    rows = table_rows(max_k)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(rows)
    elif fmt == "json":
        print(json.dumps([dict(zip(TABLE_COLUMNS, r)) for r in rows], indent=2), file=out)
    else:
        print("| " + " | ".join(TABLE_COLUMNS) + " |", file=out)
        print("|" + "---|" * len(TABLE_COLUMNS), file=out)
        for r in rows:
            print("| " + " | ".join(r) + " |", file=out)


def cmd_table(args, out) -> int:
    emit_table(args.max_k, args.format, out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta-forge",
        description="Exact even zeta values and numerical checks of the digamma reflection formula.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func, subparser=p)
        return p

    exact_formats = ("exact", "decimal", "json")
    for name, func, what in (("tangent", cmd_tangent, "tangent numbers T_0..T_n"),
                             ("cotangent", cmd_cotangent, "derivatives S_0..S_n of x cot x at 0")):
        p = add(name, func, what)
        p.add_argument("--max-index", type=_non_negative_int, required=True)
        p.add_argument("--format", choices=exact_formats, default="exact")

    p = add("bernoulli", cmd_bernoulli, "Bernoulli numbers B_2..B_n")
    p.add_argument("--max-index", type=_non_negative_int, required=True)
    p.add_argument("--route", choices=("tangent", "recurrence", "all"), default="all")
    p.add_argument("--format", choices=exact_formats, default="exact")

    p = add("zeta", cmd_zeta, "zeta(2k) as an exact multiple of pi^(2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route", choices=tuple(ZETA_ROUTES), default="all")
    p.add_argument("--format", choices=exact_formats, default="exact")

    p = add("polygamma-half", cmd_polygamma_half, "psi_{2k-1}(1/2) as an exact multiple of pi^(2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=exact_formats, default="exact")

    for name, func, what in (("force", cmd_force, "lattice force F(x) = sum 1/(n-x)^2"),
                             ("potential", cmd_potential, "regularized potential U_R(x)")):
        p = add(name, func, what)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--terms", type=_positive_int, default=10**6)
        p.add_argument("--format", choices=exact_formats, default="decimal")

    def threshold(p, name):
        p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLDS[name])

    p = add("verify-series", cmd_verify_series, "partial zeta sums against exact values")
    p.add_argument("--k-max", type=_positive_int, default=3)
    p.add_argument("--terms", type=_positive_int, default=None)
    threshold(p, "verify-series")

    p = add("verify-reflection", cmd_verify_reflection, "polygamma reflection formula from lattice sums")
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--grid", type=_grid, default=rl.grid_from_spec("0.1:0.9:0.1"))
    p.add_argument("--terms", type=_positive_int, default=None)
    threshold(p, "verify-reflection")

    p = add("verify-pv", cmd_verify_pv, "principal-value phi against -pi cot(pi x) and the (0,1) form")
    p.add_argument("--grid", type=_grid, default=rl.grid_from_spec("0.1:0.9:0.05"))
    threshold(p, "verify-pv")

    p = add("verify-plemelj", cmd_verify_plemelj, "eps-regularized integrals approaching phi +/- i pi")
    p.add_argument("--x-list", type=_float_list, default=[0.3, 0.5, 0.7])
    p.add_argument("--eps-list", type=_float_list, default=[1e-1, 1e-2, 1e-3, 1e-4])
    p.add_argument("--sign", choices=("minus", "plus"), default="minus")
    threshold(p, "verify-plemelj")

    p = add("verify-ode", cmd_verify_ode, "phi' = pi^2 + phi^2 by finite differences")
    p.add_argument("--grid", type=_grid, default=rl.grid_from_spec("0.2:0.8:0.05"))
    p.add_argument("--h", type=float, default=1e-3)
    threshold(p, "verify-ode")

    p = add("verify-fubini", cmd_verify_fubini, "inner t-integral against -log(y)/(1-y)")
    p.add_argument("--y-list", type=_float_list, default=[0.5, 2.0, 5.0])
    p.add_argument("--eps-list", type=_float_list, default=[1e-1, 1e-2, 1e-3, 1e-4])
    threshold(p, "verify-fubini")

    p = add("table", cmd_table, "table of zeta(2k), tangent and Bernoulli numbers")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on malformed arguments
    subparser = args.subparser
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except (UsageError, ValueError) as exc:
        subparser.print_usage(sys.stderr)
        print(f"{subparser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteDisagreementError as exc:
        print(f"route disagreement: {exc}", file=sys.stderr)
        return EXIT_ROUTES
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(buffer.getvalue())
        else:
            sys.stdout.write(buffer.getvalue())
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
