"""Command-line front end.

    airyquad airy --eta -1 --f "cos(t)" --h 0.2
    airyquad bessel --nu 100 --x 95
    airyquad hermite --n 50 --x 3.2
    airyquad table --id 5 --format csv
    airyquad contour --kind eta-neg --eta -1 --samples 200 --out path.csv

Exit status: 0 on success, 1 on a domain or convergence error, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import contours
from .airy import DEFAULT_STEP, Regime, eval_airy_type, eval_eta_large, eval_eta_mid, eval_eta_neg, regime_for
from .bessel import BesselMethod, bessel_j, bessel_jx
from .errors import AiryQuadError, ParseError
from .expr import parse_integrand
from .hermite import hermite_eval
from .quadrature import QuadratureConfig
from .tables import TABLES


@dataclass(frozen=True)
class OutputConfig:
    digits: int = 17

    @classmethod
    def from_env(cls) -> "OutputConfig":
        raw = os.environ.get("AIRYQUAD_DIGITS", "17")
        try:
            digits = int(raw)
        except ValueError:
            digits = 17
        return cls(min(max(digits, 1), 17))

    def cell(self, v) -> str:
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, int):
            return str(v)
        if isinstance(v, float):
            return f"{v:.{self.digits - 1}e}"
        return str(v)

    def json_value(self, v):
        if isinstance(v, float):
            if not math.isfinite(v):
                return str(v)
            return float(self.cell(v))
        return v


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so main() owns the exit code."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _csv_text(header: list[str], rows: list[list], out: OutputConfig) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([out.cell(v) for v in row])
    return buf.getvalue()


def _json_text(header: list[str], rows: list[list], out: OutputConfig) -> str:
    records = [{k: out.json_value(v) for k, v in zip(header, row)} for row in rows]
    return json.dumps(records if len(records) != 1 else records[0], indent=2) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)


def _render(header, rows, as_json: bool, out: OutputConfig) -> str:
    return _json_text(header, rows, out) if as_json else _csv_text(header, rows, out)


def _parse_eta(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise _UsageError(f"--eta expects R or R,I, got {text!r}")


def cmd_airy(args, out: OutputConfig) -> str:
    eta = _parse_eta(args.eta)
    expr = parse_integrand(args.f)
    regime = regime_for(eta) if args.regime == "auto" else Regime(args.regime)
    cfg = None
    if args.h is not None or args.tol is not None:
        h = args.h if args.h is not None else DEFAULT_STEP[regime.value]
        cfg = QuadratureConfig(h=h) if args.tol is None else QuadratureConfig(h=h, tol=args.tol)
        if args.tol is None:
            cfg = cfg.fixed()
    f = expr.integrand()
    if args.regime == "auto":
        res = eval_airy_type(f, eta, cfg)
    elif regime is Regime.ETA_MID:
        res = eval_eta_mid(f, eta, cfg)
    elif eta.imag != 0.0:
        raise _UsageError(f"--regime {args.regime} needs a real eta")
    elif regime is Regime.ETA_NEG:
        res = eval_eta_neg(f, eta.real, cfg)
    else:
        res = eval_eta_large(f, eta.real, cfg)
    header = ["re", "im", "est_error", "terms", "h", "regime"]
    row = [res.value.real, res.value.imag, res.est_error, res.terms, res.h_used, res.tag]
    return _render(header, [row], args.json, out)


def cmd_bessel(args, out: OutputConfig) -> str:
    method = args.method
    if args.x is not None:
        val = bessel_jx(args.nu, args.x, method)
        z = args.x / args.nu
    else:
        val = bessel_j(args.nu, args.z, method)
        z = args.z
    header = ["nu", "z", "value", "method", "fallback", "est_error"]
    row = [float(args.nu), float(z), val.value, val.method.value, val.fallback, val.est_error]
    return _render(header, [row], args.json, out)


def cmd_hermite(args, out: OutputConfig) -> str:
    v = hermite_eval(args.n, args.x)
    header = ["n", "x", "value", "log_magnitude", "sign"]
    row = [args.n, float(args.x), float(v), v.log_magnitude, v.sign]
    return _render(header, [row], args.json, out)


def cmd_table(args, out: OutputConfig) -> str:
    # rows are computed one after another; order is the published order
    rows = TABLES[args.id]()
    header = list(rows[0])
    body = [[r[k] for k in header] for r in rows]
    if args.format == "json":
        records = [{k: out.json_value(v) for k, v in zip(header, row)} for row in body]
        return json.dumps(records, indent=2) + "\n"
    return _csv_text(header, body, out)


def cmd_contour(args, out: OutputConfig) -> str:
    flag = contours.PARAMETER[args.kind]
    value = getattr(args, flag)
    if value is None:
        raise _UsageError(f"--kind {args.kind} needs --{flag}")
    header, rows = contours.export(args.kind, value, args.samples)
    return _csv_text(header, rows, out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="airyquad", description="Airy-type integrals, Bessel and Hermite functions by contour quadrature.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("airy", help="evaluate F(eta) for an amplitude f(t)")
    a.add_argument("--eta", required=True, help="R or R,I")
    a.add_argument("--f", required=True, help='amplitude, e.g. "cos(4*t)"')
    a.add_argument("--h", type=float, help="fixed step (no refinement unless --tol is given)")
    a.add_argument("--tol", type=float)
    a.add_argument("--regime", default="auto", choices=["auto"] + [r.value for r in Regime], help="force a contour")
    a.add_argument("--json", action="store_true")
    a.set_defaults(run=cmd_airy)

    b = sub.add_parser("bessel", help="J_nu(nu z) or J_nu(x)")
    b.add_argument("--nu", type=float, required=True)
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--z", type=float)
    g.add_argument("--x", type=float)
    b.add_argument("--method", default="auto", choices=["auto"] + [m.value for m in BesselMethod])
    b.add_argument("--json", action="store_true")
    b.set_defaults(run=cmd_bessel)

    h = sub.add_parser("hermite", help="H_n(x)")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--x", type=float, required=True)
    h.add_argument("--json", action="store_true")
    h.set_defaults(run=cmd_hermite)

    t = sub.add_parser("table", help="reproduce a reference table")
    t.add_argument("--id", type=int, required=True, choices=sorted(TABLES))
    t.add_argument("--format", default="csv", choices=["csv", "json"])
    t.add_argument("--out")
    t.set_defaults(run=cmd_table)

    c = sub.add_parser("contour", help="export a sampled integration contour as CSV")
    c.add_argument("--kind", required=True, choices=contours.KINDS)
    c.add_argument("--eta", type=float)
    c.add_argument("--z", type=float)
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--out", required=True)
    c.set_defaults(run=cmd_contour)
    return p


def main(argv: list[str] | None = None) -> int:
    out = OutputConfig.from_env()
    try:
        args = build_parser().parse_args(argv)
        text = args.run(args, out)
    except (_UsageError, ParseError) as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except (AiryQuadError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    _emit(text, getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
