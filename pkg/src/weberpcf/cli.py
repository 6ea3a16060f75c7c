"""Command-line front end: ``pcf eval``, ``pcf table`` and ``pcf verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable, Optional, Sequence

from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .errors import PCFError
from .verify import DEFAULT_SEED, SUITES, run_suite
from .weber_e import E_minus, E_plus, classical_E, classical_Estar, whittaker_W
from .weber_uv import U, V

CSV_HEADER = ["re_arg", "im_arg", "re_value", "im_value", "abs_err"]


def _w(a, x, cfg):
    return whittaker_W(a, x, cfg)[0]


EVALUATORS: dict[str, Callable] = {
    "U": U,
    "V": V,
    "E+": E_plus,
    "E-": E_minus,
    "E": classical_E,
    "Estar": classical_Estar,
    "W": _w,
}


def parse_complex(text: str) -> complex:
    """Parse ``"re,im"`` (spaces allowed) or a single real number."""
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) == 1:
        parts.append("0")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    try:
        re_, im_ = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    if not (math.isfinite(re_) and math.isfinite(im_)):
        raise argparse.ArgumentTypeError(f"non-finite number in {text!r}")
    return complex(re_, im_)


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _steps(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("steps must be >= 1")
    return v


def _cdict(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _record(fn: str, a: complex, x: complex, r: EvalResult) -> dict:
    return {
        "function": fn,
        "a": _cdict(a),
        "arg": _cdict(x),
        "value": _cdict(complex(r.value)),
        "abs_err_estimate": r.abs_err_estimate,
        "path": sorted(r.path_flags),
    }


def _fmt(x: float) -> str:
    return "%.17g" % x


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcf", description="Parabolic cylinder functions for complex parameter and argument.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--fn", required=True, choices=sorted(EVALUATORS), help="function to evaluate")
        sp.add_argument("--a", required=True, type=parse_complex, help="parameter as 're,im'")
        sp.add_argument("--rel-tol", type=_positive, default=DEFAULT_CONFIG.rel_tol)
        sp.add_argument("--out", default=None, help="output file (default: standard output)")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")

    ev = sub.add_parser("eval", help="evaluate at one argument")
    common(ev)
    ev.add_argument("--arg", required=True, type=parse_complex, help="argument as 're,im'")
    ev.set_defaults(fmt="json")

    tb = sub.add_parser("table", help="tabulate along a line in the argument")
    common(tb)
    tb.add_argument("--start", required=True, type=parse_complex)
    tb.add_argument("--end", required=True, type=parse_complex)
    tb.add_argument("--steps", required=True, type=_steps)
    tb.set_defaults(fmt="csv")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    vf.add_argument("--rel-tol", type=_positive, default=DEFAULT_CONFIG.rel_tol)
    vf.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vf.add_argument("--out", default=None)
    vf.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def table_points(start: complex, end: complex, steps: int):
    """``steps`` equally spaced arguments from ``start`` to ``end`` inclusive."""
    if steps == 1:
        return [start]
    return [start + (end - start) * (k / (steps - 1)) for k in range(steps)]


def cmd_eval(args, cfg: EvalConfig) -> int:
    r = EVALUATORS[args.fn](args.a, args.arg, cfg)
    rec = _record(args.fn, args.a, args.arg, r)
    if args.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerow(_csv_row(args.arg, r))
        _emit(buf.getvalue(), args.out)
    else:
        _emit(json.dumps(rec) + "\n", args.out)
    return 0


def _csv_row(x: complex, r: EvalResult):
    v = complex(r.value)
    return [_fmt(x.real), _fmt(x.imag), _fmt(v.real), _fmt(v.imag), _fmt(r.abs_err_estimate)]


def cmd_table(args, cfg: EvalConfig) -> int:
    f = EVALUATORS[args.fn]
    pts = table_points(args.start, args.end, args.steps)
    results = [(x, f(args.a, x, cfg)) for x in pts]
    if args.fmt == "json":
        text = json.dumps([_record(args.fn, args.a, x, r) for x, r in results]) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for x, r in results:
            w.writerow(_csv_row(x, r))
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def cmd_verify(args, cfg: EvalConfig) -> int:
    report = run_suite(args.suite, cfg=cfg, seed=args.seed)
    _emit(json.dumps(report.to_dict()) + "\n", args.out)
    return 0 if report.passed else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    cfg = DEFAULT_CONFIG.with_(rel_tol=args.rel_tol)
    handler = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify}[args.command]
    try:
        return handler(args, cfg)
    except (PCFError, ArithmeticError, ValueError) as exc:
        sys.stdout.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
