"""Command-line front end.

    lerch-forge eval    --fn gammaN --N 1 --x 1
    lerch-forge verify  --identity prop2 --x-grid 0.5:5:0.5 --tol 1e-9
    lerch-forge table   --fn gammaN-star --N 1 --x-grid 1:3:1 --format csv
    lerch-forge product --mode wallis --terms 100

Exit codes: 0 success, 1 invalid input, 2 domain or pole error,
3 convergence failure, 4 identity check failed.  On a nonzero exit nothing
is written except one JSON error record on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from decimal import Decimal, InvalidOperation
from typing import Callable, Optional

from . import barnes, gamma, hurwitz, oracles, regularization
from .errors import ConvergenceError, DomainError, LerchForgeError, ValidationError
from .params import DEFAULT_TOL, EMParams, QuadParams, ValueWithError

TOL_ENV = "LERCH_FORGE_TOL"

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_IDENTITY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


# ---------------------------------------------------------------------------
# Parsing helpers


def parse_complex(text: str) -> complex:
    """'a' or 'a,b' -> complex(a, b)."""
    parts = text.split(",")
    if len(parts) > 2:
        raise ValidationError(f"expected 're' or 're,im', got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise ValidationError(f"not a number: {text!r}") from exc
    z = complex(vals[0], vals[1] if len(vals) == 2 else 0.0)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValidationError(f"non-finite value {text!r}")
    return z


def parse_grid(text: str) -> list[complex]:
    """'a:b:step' (inclusive of b) or a ';'-separated list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValidationError(f"grid must be 'a:b:step', got {text!r}")
        try:
            a, b, step = (Decimal(p) for p in parts)
        except InvalidOperation as exc:
            raise ValidationError(f"bad grid {text!r}") from exc
        if step <= 0 or b < a:
            raise ValidationError(f"grid needs step > 0 and b >= a, got {text!r}")
        count = int((b - a) / step) + 1
        if count > 100_000:
            raise ValidationError("grid has more than 100000 points")
        return [complex(float(a + k * step)) for k in range(count)]
    items = [t for t in text.split(";") if t.strip()]
    if not items:
        raise ValidationError("empty grid")
    return [parse_complex(t.strip()) for t in items]


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError as exc:
        raise ValidationError(f"{TOL_ENV} is not a number: {raw!r}") from exc


def _em_params(args) -> EMParams:
    tol = args.em_tol if args.em_tol is not None else _default_tol()
    return EMParams(M=args.M, K=args.K, tol=tol)


# ---------------------------------------------------------------------------
# Formatting


def fmt(v: float) -> str:
    # repr is the shortest string that round-trips, at most 17 digits;
    # adding 0.0 folds a negative zero into 0.0
    return repr(float(v) + 0.0)


def _cjson(z: complex) -> dict:
    return {"re": float(z.real) + 0.0, "im": float(z.imag) + 0.0}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


# ---------------------------------------------------------------------------
# Function table

_FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "hurwitz": (("s", "x"), lambda a, p, q: hurwitz.hurwitz_zeta(a.s, a.x, p)),
    "hurwitz-ds": (("s", "x"), lambda a, p, q: hurwitz.hurwitz_zeta_ds(a.s, a.x, p)),
    "alt-hurwitz": (("s", "x"), lambda a, p, q: hurwitz.alt_hurwitz_zeta(a.s, a.x, p)),
    "alt-hurwitz-ds": (("s", "x"), lambda a, p, q: hurwitz.alt_hurwitz_zeta_ds(a.s, a.x, p)),
    "barnes": (("N", "s", "x"), lambda a, p, q: barnes.barnes_zeta(a.N, a.s, a.x, p)),
    "barnes-alt": (("N", "s", "x"), lambda a, p, q: barnes.alt_barnes_zeta(a.N, a.s, a.x, p)),
    "gamma": (("x",), lambda a, p, q: gamma.euler_gamma(a.x)),
    "gammaN": (("N", "x"), lambda a, p, q: gamma.gamma_multiple(a.N, a.x, p)),
    "gammaN-star": (("N", "x"), lambda a, p, q: gamma.gamma_multiple_star(a.N, a.x, p)),
    "mellin": (("N", "s", "x"), lambda a, p, q: oracles.mellin_barnes(a.N, a.s, a.x, q)),
    "mellin-alt": (("N", "s", "x"), lambda a, p, q: oracles.mellin_alt_barnes(a.N, a.s, a.x, q)),
    "miller": (("x",), lambda a, p, q: oracles.miller_integral(_real(a.x), q)),
}


def _real(z: complex) -> float:
    if z.imag != 0.0:
        raise DomainError("the Miller integral takes a real x")
    return z.real


class _Point:
    def __init__(self, N, s, x):
        self.N, self.s, self.x = N, s, x


def _evaluate(fn: str, pt: _Point, p: EMParams, q: QuadParams) -> tuple[dict, ValueWithError]:
    needs, call = _FUNCTIONS[fn]
    for name in needs:
        if getattr(pt, name) is None:
            raise ValidationError(f"--fn {fn} requires --{name}")
    inputs = {}
    for name in needs:
        v = getattr(pt, name)
        inputs[name] = v if name == "N" else _cjson(v)
    return inputs, call(pt, p, q)


# ---------------------------------------------------------------------------
# Commands


def cmd_eval(args) -> tuple[int, str]:
    p, q = _em_params(args), QuadParams()
    pt = _Point(args.N, args.s, args.x)
    inputs, r = _evaluate(args.fn, pt, p, q)
    rec = {"fn": args.fn, "inputs": inputs, "value": _cjson(r.value), "err_estimate": r.err_estimate}
    if args.format == "json":
        return EXIT_OK, _dumps(rec) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fn", "value_re", "value_im", "err_estimate"])
        w.writerow([args.fn, fmt(r.value.real), fmt(r.value.imag), fmt(r.err_estimate)])
        return EXIT_OK, buf.getvalue()
    label = " ".join(f"{k}={_label(v)}" for k, v in zip(_FUNCTIONS[args.fn][0], (getattr(pt, k) for k in _FUNCTIONS[args.fn][0])))
    value = _label(r.value) if r.value.imag else fmt(r.value.real)
    return EXIT_OK, f"{args.fn}({label}) = {value}  err ~ {r.err_estimate:.3e}\n"


_DEFAULT_ORDER = 4


def cmd_verify(args) -> tuple[int, str]:
    p = _em_params(args)
    grid = args.x_grid if args.x_grid is not None else None
    if grid is None and args.x is not None:
        grid = [args.x]
    orders = range(1, (args.N or _DEFAULT_ORDER) + 1)
    tol = args.tol if args.tol is not None else 1e-10
    rep = regularization.identity_report(args.identity, grid, tol, p, orders=orders, terms=args.terms)
    code = EXIT_OK if rep.passed else EXIT_IDENTITY
    points = []
    for inp, lhs, rhs, err in zip(rep.inputs, rep.lhs, rep.rhs, rep.errors):
        clean = {k: (_cjson(complex(v)) if k == "x" else v) for k, v in inp.items()}
        points.append({"inputs": clean, "lhs": _cjson(lhs), "rhs": _cjson(rhs), "rel_error": err})
    if args.format == "json":
        rec = {
            "identity": rep.name,
            "tol": rep.tol,
            "max_error": rep.max_error,
            "passed": rep.passed,
            "points": points,
        }
        return code, _dumps(rec) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "inputs", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_error", "pass"])
        for pt, inp in zip(points, rep.inputs):
            label = ";".join(f"{k}={_label(v)}" for k, v in inp.items())
            w.writerow([
                rep.name, label,
                fmt(pt["lhs"]["re"]), fmt(pt["lhs"]["im"]),
                fmt(pt["rhs"]["re"]), fmt(pt["rhs"]["im"]),
                fmt(pt["rel_error"]), int(pt["rel_error"] <= rep.tol),
            ])
        return code, buf.getvalue()
    lines = [f"identity {rep.name}  tol={rep.tol:g}"]
    for inp, err in zip(rep.inputs, rep.errors):
        label = ", ".join(f"{k}={_label(v)}" for k, v in inp.items())
        lines.append(f"  {label:<28} rel_error={err:.3e}")
    lines.append(f"max_error={rep.max_error:.3e}  {'PASS' if rep.passed else 'FAIL'}")
    return code, "\n".join(lines) + "\n"


def _label(v) -> str:
    if isinstance(v, complex):
        return fmt(v.real) if v.imag == 0.0 else f"{fmt(v.real)},{fmt(v.imag)}"
    return str(v)


def cmd_table(args) -> tuple[int, str]:
    p, q = _em_params(args), QuadParams()
    if args.x_grid is None and args.s_grid is None:
        raise ValidationError("table needs --x-grid or --s-grid")
    xs = args.x_grid if args.x_grid is not None else [args.x]
    ss = args.s_grid if args.s_grid is not None else [args.s]
    rows = []
    for s in ss:
        for x in xs:
            inputs, r = _evaluate(args.fn, _Point(args.N, s, x), p, q)
            rows.append((s, x, r))
    needs = _FUNCTIONS[args.fn][0]
    if args.format == "csv" or args.format == "text":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["fn"]
        if "N" in needs:
            header.append("N")
        if "s" in needs:
            header += ["s_re", "s_im"]
        header += ["x_re", "x_im", "value_re", "value_im", "err_estimate"]
        w.writerow(header)
        for s, x, r in rows:
            row = [args.fn]
            if "N" in needs:
                row.append(args.N)
            if "s" in needs:
                row += [fmt(s.real), fmt(s.imag)]
            row += [fmt(x.real), fmt(x.imag), fmt(r.value.real), fmt(r.value.imag), fmt(r.err_estimate)]
            w.writerow(row)
        return EXIT_OK, buf.getvalue()
    recs = []
    for s, x, r in rows:
        rec = {"fn": args.fn}
        if "N" in needs:
            rec["N"] = args.N
        if "s" in needs:
            rec["s"] = _cjson(s)
        rec.update({"x": _cjson(x), "value": _cjson(r.value), "err_estimate": r.err_estimate})
        recs.append(rec)
    return EXIT_OK, _dumps(recs) + "\n"


def cmd_product(args) -> tuple[int, str]:
    if args.terms is None:
        raise ValidationError("product needs --terms")
    if args.mode == "wallis":
        tr = regularization.wallis_partials(args.terms)
    else:
        if args.x is None:
            raise ValidationError("--mode lerch-alt needs --x")
        tr = regularization.lerch_partials(_real(args.x), args.terms)
    ref = tr.limit_reference.real
    n = len(tr.partials)
    records = [
        (int(i), float(tr.partials[k]), float(tr.averaged[k]), abs(float(tr.averaged[k]) - ref))
        for k, i in enumerate(tr.indices[:n])
    ]
    if args.format == "json":
        out = [
            {"index": i, "partial": pv, "averaged": av, "abs_error_vs_reference": e}
            for i, pv, av, e in records
        ]
        return EXIT_OK, _dumps(out) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "partial", "averaged", "abs_error_vs_reference"])
    for i, pv, av, e in records:
        w.writerow([i, fmt(pv), fmt(av), fmt(e)])
    return EXIT_OK, buf.getvalue()


# ---------------------------------------------------------------------------
# Parser and entry point


def _add_common(sp, fmt_default: str):
    sp.add_argument("--N", type=int, default=None, help="Barnes order")
    sp.add_argument("--s", type=parse_complex, default=None, help="'re' or 're,im'")
    sp.add_argument("--x", type=parse_complex, default=None, help="'re' or 're,im'")
    sp.add_argument("--M", type=int, default=None, help="Euler-Maclaurin shift (default: adaptive)")
    sp.add_argument("--K", type=int, default=15, help="number of Bernoulli correction terms")
    sp.add_argument("--em-tol", type=float, default=None, help=f"Euler-Maclaurin tolerance (env {TOL_ENV})")
    sp.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
    sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lerch-forge", description="Barnes zeta/gamma evaluation and identity checks")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one function value")
    ev.add_argument("--fn", required=True, choices=sorted(_FUNCTIONS))
    _add_common(ev, "json")
    ev.set_defaults(handler=cmd_eval)

    ve = sub.add_parser("verify", help="check a named identity on a grid")
    ve.add_argument("--identity", required=True, choices=sorted(regularization.IDENTITIES))
    ve.add_argument("--x-grid", type=parse_grid, default=None, help="'a:b:step' or 'v1;v2;...'")
    ve.add_argument("--terms", type=int, default=None, help="number of factors (wallis)")
    # --N here is the largest order checked by the identities that range over N
    ve.add_argument("--tol", type=float, default=None, help="identity tolerance (default 1e-10)")
    _add_common(ve, "json")
    ve.set_defaults(handler=cmd_verify)

    ta = sub.add_parser("table", help="tabulate a function over a grid")
    ta.add_argument("--fn", required=True, choices=sorted(_FUNCTIONS))
    ta.add_argument("--x-grid", type=parse_grid, default=None)
    ta.add_argument("--s-grid", type=parse_grid, default=None)
    _add_common(ta, "csv")
    ta.set_defaults(handler=cmd_table)

    pr = sub.add_parser("product", help="partial products of the Lerch-type or Wallis product")
    pr.add_argument("--mode", required=True, choices=("lerch-alt", "wallis"))
    pr.add_argument("--terms", type=int, default=None)
    _add_common(pr, "csv")
    pr.set_defaults(handler=cmd_product)
    return parser


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ValidationError):
        return EXIT_INPUT
    if isinstance(exc, ConvergenceError):
        return EXIT_CONVERGENCE
    if isinstance(exc, DomainError):
        return EXIT_DOMAIN
    return EXIT_INPUT


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise ValidationError("a subcommand is required: eval, verify, table or product")
        code, text = args.handler(args)
        if args.output:
            try:
                with open(args.output, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise ValidationError(f"cannot write {args.output}: {exc}") from exc
        else:
            sys.stdout.write(text)
        return code
    except LerchForgeError as exc:
        rec = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "pole", None) is not None:
            rec["pole"] = exc.pole
        sys.stderr.write(_dumps(rec) + "\n")
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
