"""Command-line entry point.

    tangential-period {classify,halfreturn,period,simulate,compare} --input FILE
        [--order N] [--grid a:b:n] [--tol T] [--out FILE] [--format json|csv]

Exit codes: 0 success, 2 classification rejected, 3 not a center,
64 usage error, 65 bad field document or order, 66 unreadable input,
70 numeric oracle failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .field import ClassificationError, FieldDocumentError, classify, load_field
from .halfreturn import center_check, involution_defect, max_alpha_order
from .oracle import OracleError, SimulationConfig, convergence_report, default_grid, measure_grid
from .period import NotACenterError, corollary_values, period_constants
from .series import Series1, TruncationError

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_NOT_CENTER = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_NOINPUT = 66
EXIT_SOFTWARE = 70

DEFAULT_ORDER = 8
COMMANDS = ("classify", "halfreturn", "period", "simulate", "compare")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# rendering


def _fmt_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        return "null"
    return format(v, ".17g")


def _to_json(obj, indent: int = 0) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_to_json(v) for v in obj) + "]"
        items = [pad + _to_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    raise TypeError(f"cannot render {type(obj).__name__}")


def _series(s: Series1) -> dict:
    return {"order": s.order, "coefficients": [str(c) for c in s.coeffs]}


def _classification(cls) -> dict:
    return {
        "kplus": cls.kplus, "kminus": cls.kminus, "delta": cls.delta,
        "aplus": str(cls.aplus), "aminus": str(cls.aminus),
        "verdicts": dict(cls.verdicts),
    }


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _to_json(report) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = report.get("rows")
    if rows:
        columns = list(rows[0])
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
    else:
        writer.writerow(["key", "value"])
        for key, value in _flatten(report):
            writer.writerow([key, _csv_cell(value)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# arguments


def _grid(text: str) -> tuple[float, ...]:
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a:b:n") from None
    if n == 1 and 0 < a == b:
        return (a,)
    if not (0 < a < b) or n < 2:
        raise argparse.ArgumentTypeError("need 0 < a < b and n >= 2, or a single point a:a:1")
    return default_grid(a, b, n)


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a number") from None
    if not 0 < v <= 1e-6:
        raise argparse.ArgumentTypeError("tolerance must lie in (0, 1e-6]")
    return v


def _order(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("order must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", required=True, metavar="FILE", help="field document (JSON)")
    common.add_argument("--order", type=_order, metavar="N",
                        help=f"series order (default {DEFAULT_ORDER}, lowered to what the field supports)")
    common.add_argument("--grid", type=_grid, metavar="a:b:n",
                        help="log-spaced initial abscissas (default 1e-3:1e-1:12)")
    common.add_argument("--tol", type=_positive_float, metavar="T",
                        help="integrator tolerance; events use T/10 (default 1e-12)")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = _Parser(prog="tangential-period",
                     description="Period constants of tangential centers of planar Filippov fields.")
    sub = parser.add_subparsers(dest="command", metavar="{" + ",".join(COMMANDS) + "}",
                                parser_class=_Parser)
    sub.required = True
    helps = {
        "classify": "check the monodromy conditions",
        "halfreturn": "half-return map coefficients and center test",
        "period": "period constants with the closed-form check",
        "simulate": "numeric half orbits and periods over the grid",
        "compare": "numeric periods against the truncated series",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _config(args) -> SimulationConfig:
    kw = {}
    if args.tol is not None:
        kw.update(abs_tol=args.tol, rel_tol=args.tol, event_tol=args.tol / 10)
    if args.grid is not None:
        kw["x_grid"] = args.grid
    return SimulationConfig(**kw)


def _resolve_order(args, field, warnings) -> int:
    limit = max_alpha_order(field)
    if args.order is not None:
        if args.order > limit:
            raise TruncationError(
                f"order {args.order} exceeds what a field of order {field.order} supports ({limit})"
            )
        return args.order
    if limit < DEFAULT_ORDER:
        warnings.append(f"order lowered from {DEFAULT_ORDER} to {limit} (field order {field.order})")
    return min(DEFAULT_ORDER, limit)


# ---------------------------------------------------------------------------
# commands


def _cmd_classify(field, args, report, warnings):
    return EXIT_OK


def _cmd_halfreturn(field, args, report, warnings):
    order = _resolve_order(args, field, warnings)
    center = center_check(field, order)
    report["order"] = order
    report["alpha"] = {
        "plus": {"order": order, "coefficients": [str(a) for a in center.alpha_plus]},
        "minus": {"order": order, "coefficients": [str(a) for a in center.alpha_minus]},
    }
    report["center"] = {
        "is_center_to_order": center.is_center_to_order,
        "first_mismatch_index": center.first_mismatch_index,
        "phi": _series(center.phi) if center.phi is not None else None,
    }
    report["involution_defect"] = {
        side: _series(involution_defect(Series1(alpha, order)))
        for side, alpha in (("plus", center.alpha_plus), ("minus", center.alpha_minus))
    }
    return EXIT_OK


def _period_block(data, field) -> dict:
    t0, t1 = corollary_values(field)
    return {
        "order": data.order,
        "That": [str(c) for c in data.That],
        "T": _series(data.T),
        "Tplus": _series(data.Tplus),
        "Tminus": _series(data.Tminus),
        "phi": _series(data.phi),
        "corollary": {
            "t0": str(t0), "t1": str(t1),
            "match": data.That[0] == t0 and (data.order < 1 or data.That[1] == t1),
        },
    }


def _cmd_period(field, args, report, warnings):
    order = _resolve_order(args, field, warnings)
    report.update(_period_block(period_constants(field, order), field))
    return EXIT_OK


def _config_block(cfg) -> dict:
    return {"abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol, "event_tol": cfg.event_tol,
            "max_steps": cfg.max_steps}


def _cmd_simulate(field, args, report, warnings):
    cfg = _config(args)
    report["config"] = _config_block(cfg)
    report["rows"] = [
        {"x0": m.x0, "landing_x_plus": m.landing_x_plus, "landing_x_minus": m.landing_x_minus,
         "time_plus": m.time_plus, "time_minus": m.time_minus, "period": m.period}
        for m in measure_grid(field, cfg)
    ]
    return EXIT_OK


def _cmd_compare(field, args, report, warnings):
    order = _resolve_order(args, field, warnings)
    data = period_constants(field, order)
    cfg = _config(args)
    conv = convergence_report(field, order, cfg, data=data)
    report["config"] = _config_block(cfg)
    report["period"] = _period_block(data, field)
    report["slope"] = conv.slope
    report["saturated"] = conv.saturated
    report["points_used"] = conv.points_used
    report["rows"] = [
        {"x": x, "period_numeric": n, "period_series": s, "residual": r}
        for x, n, s, r in zip(conv.x, conv.numeric, conv.series, conv.residual)
    ]
    if conv.saturated:
        warnings.append("residuals at the noise floor; slope not fitted")
    return EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "halfreturn": _cmd_halfreturn,
    "period": _cmd_period,
    "simulate": _cmd_simulate,
    "compare": _cmd_compare,
}


def _emit(report: dict, args) -> None:
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_NOINPUT

    report: dict = {"command": args.command, "input": args.input, "status": "ok"}
    warnings: list[str] = []
    try:
        field = load_field(text)
        report["field_order"] = field.order
        report["classification"] = _classification(classify(field))
        code = _COMMANDS[args.command](field, args, report, warnings)
    except FieldDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except ClassificationError as exc:
        report.update(status="rejected", error=str(exc), condition=exc.condition,
                      verdicts=exc.verdicts)
        code = EXIT_REJECTED
    except NotACenterError as exc:
        report.update(status="not a center", error=str(exc),
                      first_mismatch_index=exc.first_mismatch_index)
        code = EXIT_NOT_CENTER
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except OracleError as exc:
        report.update(status="oracle failure", error=str(exc))
        code = EXIT_SOFTWARE
    except ValueError as exc:  # flag values the library rejects, e.g. a too-narrow grid
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report["warnings"] = warnings
    if code != EXIT_OK:
        print(f"{args.command}: {report['error']}", file=sys.stderr)
    _emit(report, args)
    return code


def main() -> None:
    raise SystemExit(run())
