"""Command-line front end.

    chaosmaps iterate      --map logistic --r 3.95
    chaosmaps bifurcation  --map lts --r-from 0.5 --r-to 4 --r-step 0.01
    chaosmaps zero-one     --map logistic --r 3.95 --pq-csv pq.csv --growth-csv growth.csv
    chaosmaps three-state  --map lts --r 3.65 --slopes-csv slopes.csv
    chaosmaps lyapunov     --map lts --r-from 3.1 --r-to 3.9 --r-step 0.1
    chaosmaps sweep        --map lss --format csv --output lss.csv

Exit status: 0 on success, 2 on usage errors, 1 on domain or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from chaosmaps import reports
from chaosmaps.lyapunov import lyapunov_exponent
from chaosmaps.maps import DomainError, MapKind, MapSpec, bifurcation_scan, check_r, iterate, parameter_grid
from chaosmaps.sweep import SweepConfig, run_sweep
from chaosmaps.three_state import ThreeStateParams, three_state_test
from chaosmaps.zero_one import ZeroOneParams, zero_one_test


def _control_parameter(text: str) -> float:
    try:
        return check_r(float(text))
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError(f"r={text} is outside the domain: r must lie in (0, 4]")


def _map_kind(text: str) -> MapKind:
    try:
        return MapKind.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="chaosmaps", description=__doc__.split("\n")[0], formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, n_flag="--n", single_r=True):
        p.add_argument("--map", type=_map_kind, default=MapKind.LOGISTIC,
                       help="logistic, lts, lss or tss")
        if single_r:
            p.add_argument("--r", type=_control_parameter, default=3.95, help="control parameter in (0, 4]")
        p.add_argument("--x0", type=float, default=0.01, help="initial value in [0, 1)")
        if n_flag:
            p.add_argument(n_flag, dest="n", type=_positive_int, default=5000, help="series length N")
        p.add_argument("--precision", type=_positive_int, default=6, help="significant digits in output")
        p.add_argument("--output", default="-", help="output path, '-' for stdout")

    def grid(p, r_from, r_to, r_step):
        p.add_argument("--r-from", type=_control_parameter, default=r_from, help="first grid value")
        p.add_argument("--r-to", type=_control_parameter, default=r_to, help="last grid value")
        p.add_argument("--r-step", type=float, default=r_step, help="grid spacing")

    def zero_one_flags(p):
        p.add_argument("--c", type=float, default=0.8, help="phase angle c in (0, 2 pi)")
        p.add_argument("--n-cut", type=_positive_int, default=None, help="largest lag; default N/10")
        p.add_argument("--regular-max", type=float, default=0.25, help="K below this is Regular")
        p.add_argument("--strong-min", type=float, default=0.60, help="K at or above this is StrongChaos")

    def three_state_flags(p):
        p.add_argument("--window", type=_positive_int, default=50, help="window length n")
        p.add_argument("--subsets", type=_positive_int, default=100, help="number of windows Q")
        p.add_argument("--delay", type=_positive_int, default=1, help="ordinal delay p")
        p.add_argument("--eps-equal", type=float, default=0.0, help="equality tolerance for symbols")
        p.add_argument("--growth-threshold", type=float, default=0.25,
                       help="spread growth exponent above which the series is Chaotic")

    p = sub.add_parser("iterate", help="iterate a map", formatter_class=fmt)
    common(p)
    p.add_argument("--burn-in", type=_nonnegative_int, default=0, help="discarded leading iterates")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")

    p = sub.add_parser("bifurcation", help="bifurcation scan data", formatter_class=fmt)
    common(p, n_flag=None, single_r=False)
    grid(p, 0.01, 4.0, 0.01)
    p.add_argument("--burn-in", type=_nonnegative_int, default=1000, help="discarded leading iterates")
    p.add_argument("--samples", type=_positive_int, default=200, help="recorded iterates per r")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")

    p = sub.add_parser("zero-one", help="0-1 test for chaos", formatter_class=fmt)
    common(p)
    p.add_argument("--burn-in", type=_nonnegative_int, default=0, help="discarded leading iterates")
    zero_one_flags(p)
    p.add_argument("--pq-csv", default=None, help="write the (p, q) path as CSV")
    p.add_argument("--growth-csv", default=None, help="write (log n, log M(n)) as CSV")

    p = sub.add_parser("three-state", help="three-state test", formatter_class=fmt)
    common(p, n_flag="--n-total")
    p.add_argument("--burn-in", type=_nonnegative_int, default=0, help="discarded leading iterates")
    three_state_flags(p)
    p.add_argument("--slopes-csv", default=None, help="write per-window slopes as CSV")

    p = sub.add_parser("lyapunov", help="largest Lyapunov exponent", formatter_class=fmt)
    common(p, n_flag=None)
    p.add_argument("--n", dest="n", type=_positive_int, default=100_000, help="averaged iterates")
    p.add_argument("--burn-in", type=_nonnegative_int, default=1000, help="discarded leading iterates")
    p.add_argument("--r-from", type=_control_parameter, default=None, help="grid start; enables grid mode")
    p.add_argument("--r-to", type=_control_parameter, default=None, help="grid end")
    p.add_argument("--r-step", type=float, default=0.1, help="grid spacing")
    p.add_argument("--format", choices=("csv", "json"), default="json", help="output format")

    p = sub.add_parser("sweep", help="all detectors over a parameter grid", formatter_class=fmt)
    common(p, single_r=False)
    grid(p, 3.15, 3.95, 0.1)
    zero_one_flags(p)
    three_state_flags(p)
    p.add_argument("--no-lyapunov", action="store_true", help="skip the Lyapunov column")
    p.add_argument("--lyapunov-n", type=_positive_int, default=100_000, help="iterates for lambda")
    p.add_argument("--workers", type=_positive_int, default=1, help="parallel worker processes")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    return parser


def _zero_one_params(args) -> ZeroOneParams:
    return ZeroOneParams(c=args.c, n_cut=args.n_cut, regular_max=args.regular_max, strong_min=args.strong_min)


def _three_state_params(args) -> ThreeStateParams:
    return ThreeStateParams(
        window=args.window,
        subsets=args.subsets,
        delay=args.delay,
        eps_equal=args.eps_equal,
        growth_threshold=args.growth_threshold,
    )


def _series(args):
    return iterate(MapSpec(args.map, args.r), args.x0, args.n, args.burn_in)


def _run(args) -> None:
    prec = args.precision
    context = {"map": getattr(args, "map", MapKind.LOGISTIC).value}

    if args.command == "iterate":
        t = _series(args)
        obj = reports.trajectory_table(t) if args.format == "csv" else reports.trajectory_record(t)
        reports.emit_report(obj, args.format, args.output, prec)

    elif args.command == "bifurcation":
        b = bifurcation_scan(args.map, args.r_from, args.r_to, args.r_step, args.x0, args.burn_in, args.samples)
        obj = reports.bifurcation_table(b) if args.format == "csv" else reports.bifurcation_record(b)
        reports.emit_report(obj, args.format, args.output, prec)

    elif args.command == "zero-one":
        t = _series(args)
        z = zero_one_test(t.values, _zero_one_params(args))
        if args.pq_csv:
            reports.emit_report(reports.pq_table(z), "csv", args.pq_csv, prec)
        if args.growth_csv:
            reports.emit_report(reports.growth_table(z), "csv", args.growth_csv, prec)
        record = reports.zero_one_record(z, N=args.n, x0=t.x0, r=args.r, burn_in=args.burn_in, **context)
        reports.emit_report(record, "json", args.output, prec)

    elif args.command == "three-state":
        t = _series(args)
        res = three_state_test(t.values, _three_state_params(args))
        if args.slopes_csv:
            reports.emit_report(reports.slopes_table(res), "csv", args.slopes_csv, prec)
        record = reports.three_state_record(res, N=args.n, x0=t.x0, r=args.r, burn_in=args.burn_in, **context)
        reports.emit_report(record, "json", args.output, prec)

    elif args.command == "lyapunov":
        if args.r_from is None:
            spec = MapSpec(args.map, args.r)
            res = lyapunov_exponent(spec, args.x0, args.n, args.burn_in)
            if args.format == "json":
                reports.emit_report(reports.lyapunov_record(res, spec, args.x0), "json", args.output, prec)
            else:
                reports.emit_report(reports.lyapunov_table([(spec.r, res.lam)]), "csv", args.output, prec)
            return
        r_to = args.r_to if args.r_to is not None else args.r_from
        rows = [
            (float(r), lyapunov_exponent(MapSpec(args.map, r), args.x0, args.n, args.burn_in).lam)
            for r in parameter_grid(args.r_from, r_to, args.r_step)
        ]
        if args.format == "csv":
            reports.emit_report(reports.lyapunov_table(rows), "csv", args.output, prec)
        else:
            record = {
                "schema_version": reports.SCHEMA_VERSION,
                "map": args.map.value,
                "x0": args.x0,
                "n": args.n,
                "burn_in": args.burn_in,
                "points": [{"r": r, "lambda": lam} for r, lam in rows],
            }
            reports.emit_report(record, "json", args.output, prec)

    elif args.command == "sweep":
        config = SweepConfig(
            kind=args.map,
            r_from=args.r_from,
            r_to=args.r_to,
            r_step=args.r_step,
            x0=args.x0,
            n=args.n,
            zero_one=_zero_one_params(args),
            three_state=_three_state_params(args),
            run_lyapunov=not args.no_lyapunov,
            lyapunov_n=args.lyapunov_n,
        )
        report = run_sweep(config, workers=args.workers)
        if args.format == "csv":
            reports.emit_report(reports.sweep_table(report), "csv", args.output, prec)
        else:
            reports.emit_report(reports.region_report_record(report), "json", args.output, prec)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _run(args)
    except DomainError as exc:
        print(f"chaosmaps: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        where = exc.filename if exc.filename else ""
        print(f"chaosmaps: error: cannot write {where}: {exc.strerror or exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
