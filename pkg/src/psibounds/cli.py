"""Command-line front end: evaluate functions, run sweeps, emit tables.

Exit codes: 0 success / all-pass, 1 verification failure, 2 usage or domain
error, 3 unknown function or family name.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import bounds, oracle, specfun, verifier
from .bounds import BoundFamily
from .errors import DomainError, ToleranceError

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_NAME = 3


def _fmt(value: float, precision: float) -> str:
    digits = max(1, min(17, int(round(-math.log10(precision)))))
    return f"{value:.{digits}g}"


def _eval_target(name: str, x: float, eps: float):
    """Resolve an eval function name to (value, radius-or-None)."""
    if name == "gamma":
        lg = oracle.ref_log_gamma(x, eps)
        value = math.exp(lg.value)
        return value, value * (lg.error_radius + 2.0 * 2.0**-52)
    if name == "log_gamma":
        r = oracle.ref_log_gamma(x, eps)
        return r.value, r.error_radius
    if name == "digamma":
        r = oracle.ref_digamma(x, eps)
        return r.value, r.error_radius
    if name == "trigamma":
        r = oracle.ref_trigamma(x, eps)
        return r.value, r.error_radius
    if name == "stirling_ratio":
        mu = oracle.ref_binet_mu(x, eps)
        value = math.exp(mu.value)
        return value, value * (mu.error_radius + 2.0 * 2.0**-52)
    if name.startswith("polygamma:"):
        n = int(name.split(":", 1)[1])
        return specfun.polygamma(n, x), None
    if name.startswith("tau:"):
        k = int(name.split(":", 1)[1])
        return bounds.tau(k, x), None
    if name.startswith("g_c:"):
        c = float(name.split(":", 1)[1])
        return bounds.g_c(x, c), None
    plain = {
        "beta": bounds.beta,
        "delta_star": bounds.delta_star,
        "f": bounds.aux_f,
        "h": bounds.aux_h,
        "theta": bounds.aux_theta,
        "H": bounds.aux_big_h,
        "P": bounds.aux_big_p,
        "p": bounds.aux_p,
    }
    if name in plain:
        return plain[name](x), None
    raise KeyError(f"unknown function {name!r}")


def cmd_eval(args) -> int:
    value, radius = _eval_target(args.fn, args.x, args.precision)
    if radius is None:
        print(_fmt(value, args.precision))
    else:
        print(f"{_fmt(value, args.precision)} ± {radius:.1e}")
    return EXIT_OK


_DEFAULTS = {"xmin": 1e-3, "xmax": 1e4, "points": 500, "scale": "log",
             "precision": 1e-12, "format": "csv"}


class _Remember(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, f"{self.dest}_given", True)


def _xmin_was_defaulted(args) -> bool:
    return getattr(args, "xmin_given", None) is None


def _grid_from_args(args, family: BoundFamily | None = None) -> verifier.GridSpec:
    x_min = args.xmin
    # Only a *defaulted* lower edge is clipped into the family domain; an
    # explicit out-of-domain request is an error, not a silent adjustment.
    if family is not None and _xmin_was_defaulted(args):
        x_min = max(x_min, family.domain_min)
    return verifier.GridSpec(x_min=x_min, x_max=args.xmax, points=args.points,
                             spacing=args.scale)


def _report_rows(report: verifier.InequalityReport) -> list[dict]:
    rows = []
    for r in report.records:
        rows.append(
            {
                "x": r.x,
                "target": r.target.value,
                "target_radius": r.target.error_radius,
                "lower": r.interval.lower,
                "upper": r.interval.upper,
                "lower_margin": r.lower_margin,
                "upper_margin": r.upper_margin,
                "lower_threshold": r.lower_threshold,
                "upper_threshold": r.upper_threshold,
                "rel_lower_margin": r.rel_lower_margin,
                "rel_upper_margin": r.rel_upper_margin,
                "pass": r.passed,
            }
        )
    return rows


def _emit(doc: dict, rows: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump({**doc, "rows": rows}, stream, indent=1)
        stream.write("\n")
        return
    writer = csv.DictWriter(stream, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v)
                         for k, v in row.items()})


def cmd_verify(args) -> int:
    family = BoundFamily.parse(args.family)
    grid = _grid_from_args(args, family)
    report = verifier.sweep(grid, family, eps=args.precision)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "family": family.value,
        "grid": grid.as_dict(),
        "scale": report.scale,
        "notes": list(report.notes),
        "summary": report.summary(),
    }
    _emit(doc, _report_rows(report), args.format, _open_out(args))
    return EXIT_OK if report.all_pass else EXIT_VERIFY_FAILED


def cmd_compare(args) -> int:
    families = [BoundFamily.parse(tag) for tag in args.families.split(",") if tag]
    if len(families) < 2:
        raise DomainError("compare needs at least two families")
    x_min = args.xmin
    if _xmin_was_defaulted(args):
        x_min = max([x_min] + [f.domain_min for f in families])
    grid = verifier.GridSpec(x_min=x_min, x_max=args.xmax, points=args.points,
                             spacing=args.scale)
    rows_raw = verifier.compare(grid, families, args.side, eps=args.precision)
    rows = [
        {"x": row.x, **{f.value: row.gap_by_family[f] for f in families}}
        for row in rows_raw
    ]
    smaller = {
        f.value: sum(
            1 for row in rows_raw
            if row.gap_by_family[f] == min(row.gap_by_family.values())
        )
        for f in families
    }
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "compare",
        "families": [f.value for f in families],
        "side": args.side,
        "grid": grid.as_dict(),
        "summary": {
            "smallest_gap_counts": smaller,
            "note": "observed direction recorded, not asserted",
        },
    }
    _emit(doc, rows, args.format, _open_out(args))
    return EXIT_OK


def cmd_constants(args) -> int:
    gam = oracle.ref_euler_gamma(args.precision)
    log_two_pi = specfun.LOG_TWO_PI
    rows = [
        {"name": "euler_gamma", "value": gam.value, "error_radius": gam.error_radius},
        {"name": "log_two_pi", "value": log_two_pi,
         "error_radius": 2.0 * math.ulp(log_two_pi)},
        {"name": "half_log_two_pi", "value": specfun.HALF_LOG_TWO_PI,
         "error_radius": math.ulp(log_two_pi)},
    ]
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "constants"}
        _emit(doc, rows, "json", _open_out(args))
    else:
        # Shortest round-trip representation: --precision tunes how tightly
        # the constant is derived, not how many digits survive printing.
        stream = _open_out(args)
        for row in rows:
            stream.write(f"{row['name']} = {row['value']!r} ± {row['error_radius']:.1e}\n")
    return EXIT_OK


def _open_out(args):
    if getattr(args, "output", None):
        return open(args.output, "w", newline="")
    return sys.stdout


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--xmin", type=float, default=_DEFAULTS["xmin"], action=_Remember)
    p.add_argument("--xmax", type=float, default=_DEFAULTS["xmax"], action=_Remember)
    p.add_argument("--points", type=int, default=_DEFAULTS["points"], action=_Remember)
    p.add_argument("--scale", choices=("log", "linear"), default=_DEFAULTS["scale"],
                   action=_Remember)
    p.add_argument("--precision", type=float, default=_DEFAULTS["precision"])
    p.add_argument("--format", choices=("csv", "json"), default=_DEFAULTS["format"])
    p.add_argument("--output", help="write the artifact here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psibounds",
        description="Evaluate digamma-family functions and certify their bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("fn", help="gamma, log_gamma, digamma, trigamma, "
                        "polygamma:n, stirling_ratio, beta, delta_star, tau:k, "
                        "f, h, theta, H, P, p, g_c:c")
    p_eval.add_argument("x", type=float)
    p_eval.add_argument("--precision", type=float, default=_DEFAULTS["precision"])
    p_eval.set_defaults(run=cmd_eval)

    p_verify = sub.add_parser("verify", help="sweep one bound family over a grid")
    p_verify.add_argument("--family", required=True)
    _add_common(p_verify)
    p_verify.set_defaults(run=cmd_verify)

    p_cmp = sub.add_parser("compare", help="tabulate per-family bound gaps")
    p_cmp.add_argument("--families", required=True,
                       help="comma-separated family tags sharing one target")
    p_cmp.add_argument("--side", choices=("lower", "upper", "width"),
                       default="upper")
    _add_common(p_cmp)
    p_cmp.set_defaults(run=cmd_compare)

    p_const = sub.add_parser("constants", help="print the library constants")
    p_const.add_argument("--precision", type=float, default=_DEFAULTS["precision"])
    p_const.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p_const.add_argument("--output")
    p_const.set_defaults(run=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except (DomainError, ToleranceError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
