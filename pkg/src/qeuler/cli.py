"""Command-line interface.

    qeuler eval   {qeuler,zeta,ssum,euler-classical} ...
    qeuler verify {thm1,thm2,thm3,eq5,eq9,eq15,eq16} ...   (grid flags)
    qeuler table  {qeuler,zeta,ssum,euler-classical} ... --output PATH

Exit codes: 0 success / all identities pass, 1 some identity failed,
2 usage, domain or convergence error.  Errors are written to stderr as one
JSON object ``{"error": <class>, "message": <text>}``.

Settings may come from ``--config FILE`` (INI, section ``[qeuler]``, keys
``backend q D max_terms abs_tol tol format seed``); command-line flags win.
``$QEULER_TOL`` replaces the built-in default tolerance.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import itertools
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .classical import euler_poly
from .errors import QEulerError
from .polynomials import (
    eq15_sides,
    eq16_sides,
    qeuler_addition,
    qeuler_closed,
    qeuler_multisum,
    qeuler_single_sum,
)
from .report import SCHEMA, IdentityReport
from .scalar import QBase, is_exact
from .serialize import scalar_to_json
from .series import SeriesControl
from .symmetry import s_sum, theorem1_sides, theorem2_sides, theorem3_sides
from .zeta import interpolation_check, zeta_multisum, zeta_single_sum

TABLE_SCHEMA = "qeuler.table/1"

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(QEulerError):
    pass


# -- value parsing -----------------------------------------------------------


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("i", "j")
    if "/" in t and "j" not in t:
        return complex(float(Fraction(t)))
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational number {text!r}") from None


def parse_list(text: str, item=int) -> list:
    """'0..4' -> [0,1,2,3,4]; '1,3,5' -> [1,3,5]; a single value -> [value]."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part and item is int:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(item(part))
    if not out:
        raise UsageError(f"empty list {text!r}")
    return out


# -- run configuration -------------------------------------------------------


@dataclass
class RunConfig:
    backend: str = "float"
    q: str = "0.5"
    root_den: int | None = None
    max_terms: int = 4000
    abs_tol: float = 1e-15
    tol: float | None = None
    fmt: str = "json"
    seed: int = 0

    def qbase(self, *rationals) -> QBase:
        if self.backend == "exact":
            D = self.root_den
            if D is None:
                D = 1
                for v in rationals:
                    D = D * Fraction(v).denominator // math.gcd(D, Fraction(v).denominator)
            return QBase.exact(parse_rational(self.q), D)
        if self.backend != "float":
            raise UsageError(f"unknown backend {self.backend!r}")
        return QBase.float(parse_complex(self.q))

    def ctrl(self) -> SeriesControl:
        return SeriesControl(max_terms=self.max_terms, abs_tol=self.abs_tol)


_CONFIG_KEYS = {
    "backend": ("backend", str),
    "q": ("q", str),
    "d": ("root_den", int),
    "max_terms": ("max_terms", int),
    "abs_tol": ("abs_tol", float),
    "tol": ("tol", float),
    "format": ("fmt", str),
    "seed": ("seed", int),
}


def load_config(path: str | None) -> RunConfig:
    cfg = RunConfig()
    if not path:
        return cfg
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise UsageError(f"cannot read config file {path}")
    if "qeuler" not in parser:
        raise UsageError(f"config file {path} has no [qeuler] section")
    for key, raw in parser["qeuler"].items():
        if key not in _CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r}")
        attr, conv = _CONFIG_KEYS[key]
        setattr(cfg, attr, conv(raw))
    return cfg


def resolve_config(args) -> RunConfig:
    cfg = load_config(args.config)
    for attr in ("backend", "q", "root_den", "max_terms", "abs_tol", "tol", "fmt", "seed"):
        v = getattr(args, attr, None)
        if v is not None:
            setattr(cfg, attr, v)
    return cfg


# -- output helpers ----------------------------------------------------------


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    flat = [_flatten(r) for r in rows]
    fields: list[str] = []
    for r in flat:
        for k in r:
            if k not in fields:
                fields.append(k)
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)


def _flatten(obj: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in obj.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out


def _value_text(v, q: QBase) -> str:
    if is_exact(v):
        d = scalar_to_json(v, q)
        return d["exact"] + (f" = {d['value']}" if d.get("value") else "")
    return repr(v.real) if v.imag == 0 else repr(v)


# -- eval --------------------------------------------------------------------


def _eval_value(kind: str, args, cfg: RunConfig) -> tuple[dict, object, QBase | None]:
    if kind == "euler-classical":
        poly = euler_poly(args.n, args.r)
        row = {"kind": kind, "params": {"n": args.n, "r": args.r},
               "poly": str(poly), "coeffs": [str(c) for c in poly.coeffs]}
        if args.x is not None:
            row["params"]["x"] = str(parse_rational(args.x))
            row["value"] = str(poly(parse_rational(args.x)))
        return row, str(poly) if args.x is None else row["value"], None
    if kind == "qeuler":
        x = parse_rational(args.x or "0")
        q = cfg.qbase(x)
        params = {"n": args.n, "r": args.r, "x": str(x)}
        row = {"kind": kind, "params": params, "q": q.describe()}
        if args.method == "closed":
            v = qeuler_closed(args.n, args.r, x, q, gaussian=args.gaussian)
        else:
            fn = qeuler_single_sum if args.method == "single" else qeuler_multisum
            kw = {"gaussian": args.gaussian} if args.method == "single" else {}
            sv = fn(args.n, args.r, x, q, cfg.ctrl(), **kw)
            v = sv.value
            row.update(tail_bound=sv.tail_bound, terms=sv.terms)
        params["method"] = args.method
        row["value"] = scalar_to_json(v, q)
        return row, v, q
    if kind == "zeta":
        x = parse_rational(args.x or "1")
        q = cfg.qbase(x)
        s = parse_complex(args.s)
        fn = zeta_multisum if args.method == "multi" else zeta_single_sum
        sv = fn(s, args.r, x, q, cfg.ctrl())
        row = {"kind": kind, "params": {"s": {"re": s.real, "im": s.imag}, "r": args.r, "x": str(x),
                                        "method": "multi" if args.method == "multi" else "single"},
               "q": q.describe(), "value": scalar_to_json(sv.value, q),
               "tail_bound": sv.tail_bound, "terms": sv.terms}
        return row, sv.value, q
    if kind == "ssum":
        q = cfg.qbase()
        q_eff = q.power(args.base_power)
        v = s_sum(args.n, args.i, args.r, args.a, q_eff, method=args.ssum_method)
        row = {"kind": kind, "params": {"n": args.n, "i": args.i, "r": args.r, "a": args.a,
                                        "base_power": args.base_power},
               "q": q.describe(), "value": scalar_to_json(v, q)}
        return row, v, q
    raise UsageError(f"unknown kind {kind!r}")


def cmd_eval(args, cfg: RunConfig, out) -> int:
    if args.method is None:
        args.method = "closed" if args.kind == "qeuler" else "single"
    row, value, q = _eval_value(args.kind, args, cfg)
    if cfg.fmt == "text":
        out.write((value if isinstance(value, str) else _value_text(value, q)) + "\n")
    else:
        _emit_rows([row], cfg.fmt, out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

_GRID_AXES = {
    "thm1": ("a", "b", "s", "r", "x"),
    "thm2": ("a", "b", "n", "r", "x"),
    "thm3": ("a", "b", "n", "r", "x"),
    "eq5": ("n", "r", "x"),
    "eq9": ("n", "r", "x", "y"),
    "eq15": ("m", "n", "r", "x", "y"),
    "eq16": ("m", "n", "r", "x", "y"),
}

_AXIS_PARSERS = {"s": parse_complex, "x": parse_rational, "y": parse_rational}


def _grid(identity: str, args) -> list[dict]:
    axes = _GRID_AXES[identity]
    values = []
    for ax in axes:
        raw = getattr(args, ax)
        if raw is None:
            raise UsageError(f"verify {identity} needs --{ax}")
        values.append(parse_list(raw, _AXIS_PARSERS.get(ax, int)))
    return [dict(zip(axes, combo)) for combo in itertools.product(*values)]


def run_identity(identity: str, point: dict, cfg: RunConfig, unchecked: bool = False) -> IdentityReport:
    tol = cfg.tol
    if identity == "thm1":
        q = cfg.qbase(point["x"])
        return theorem1_sides(point["a"], point["b"], point["s"], point["r"], point["x"], q,
                              cfg.ctrl(), tol, unchecked=unchecked)
    if identity in ("thm2", "thm3"):
        fn = theorem2_sides if identity == "thm2" else theorem3_sides
        q = cfg.qbase(point["x"])
        return fn(point["a"], point["b"], point["n"], point["r"], point["x"], q,
                  tol, unchecked=unchecked)
    if identity == "eq5":
        q = cfg.qbase(point["x"])
        return interpolation_check(point["n"], point["r"], point["x"], q, cfg.ctrl(), tol)
    if identity == "eq9":
        q = cfg.qbase(point["x"], point["y"])
        return qeuler_addition(point["n"], point["r"], point["x"], point["y"], q, tol)
    fn = eq15_sides if identity == "eq15" else eq16_sides
    q = cfg.qbase(point["x"], point["y"])
    return fn(point["m"], point["n"], point["r"], point["x"], point["y"], q, tol)


def _perturbed(rep: IdentityReport, eps: float) -> IdentityReport:
    delta = Fraction(str(eps)) if is_exact(rep.rhs) else eps
    rhs = rep.rhs + delta
    return IdentityReport.compare(rep.identity, rep.lhs, rhs, rep.q, rep.tol,
                                  **{**rep.params, "perturbed_rhs": eps})


def cmd_verify(args, cfg: RunConfig, out) -> int:
    points = _grid(args.identity, args)
    if args.sample is not None:
        rng = random.Random(cfg.seed)
        points = rng.sample(points, min(args.sample, len(points)))
    reports = []
    for point in points:
        rep = run_identity(args.identity, point, cfg, unchecked=args.unchecked)
        if args.perturb:
            rep = _perturbed(rep, args.perturb)
        reports.append(rep)
    rows = [r.to_dict() for r in reports]
    diffs = [r.abs_diff for r in reports if r.abs_diff is not None]
    failed = sum(not r.passed for r in reports)
    summary = {
        "schema": SCHEMA,
        "summary": {
            "identity": args.identity,
            "count": len(reports),
            "passed": len(reports) - failed,
            "failed": failed,
            "max_abs_diff": max(diffs) if diffs else None,
            "all_exact": all(r.exact for r in reports),
        },
    }
    if cfg.fmt == "csv":
        _emit_rows(rows, "csv", out)
        out.write(json.dumps(summary) + "\n")
    else:
        _emit_rows(rows + [summary], "json", out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- table -------------------------------------------------------------------


def table_rows(kind: str, args, cfg: RunConfig) -> tuple[list[dict], QBase | None]:
    rows = []
    q_used = None
    if kind == "euler-classical":
        for n, r in itertools.product(parse_list(args.n), parse_list(args.r or "1")):
            p = euler_poly(n, r)
            rows.append({"n": n, "r": r, "poly": str(p)})
        return rows, None
    if kind == "qeuler":
        for n, r, x in itertools.product(parse_list(args.n), parse_list(args.r or "1"),
                                         parse_list(args.x or "0", parse_rational)):
            q = q_used = cfg.qbase(x)
            v = qeuler_closed(n, r, x, q)
            rows.append({"n": n, "r": r, "x": str(x), **_value_columns(v, q)})
        return rows, q_used
    if kind == "zeta":
        for s, r, x in itertools.product(parse_list(args.s or "2", parse_complex),
                                         parse_list(args.r or "1"),
                                         parse_list(args.x or "1", parse_rational)):
            q = q_used = cfg.qbase(x)
            sv = zeta_single_sum(s, r, x, q, cfg.ctrl())
            rows.append({"s_re": s.real, "s_im": s.imag, "r": r, "x": str(x),
                         **_value_columns(sv.value, q), "tail_bound": sv.tail_bound})
        return rows, q_used
    if kind == "ssum":
        q = q_used = cfg.qbase()
        for n, r, a in itertools.product(parse_list(args.n), parse_list(args.r or "1"),
                                         parse_list(args.a or "1")):
            for i in range(n + 1):
                v = s_sum(n, i, r, a, q.power(args.base_power))
                rows.append({"n": n, "i": i, "r": r, "a": a, **_value_columns(v, q)})
        return rows, q_used
    raise UsageError(f"unknown kind {kind!r}")


def _value_columns(v, q: QBase) -> dict:
    if is_exact(v):
        d = scalar_to_json(v, q)
        return {"exact": d["exact"], "value": d.get("value")}
    return {"re": v.real, "im": v.imag}


def render_table(kind: str, rows: list[dict], q: QBase | None, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "json":
        doc = {"schema": TABLE_SCHEMA, "kind": kind, "q": q.describe() if q else None, "rows": rows}
        buf.write(json.dumps(doc, indent=1) + "\n")
    else:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
    return buf.getvalue()


def cmd_table(args, cfg: RunConfig, out) -> int:
    rows, q = table_rows(args.kind, args, cfg)
    fmt = "json" if cfg.fmt == "json" else "csv"
    text = render_table(args.kind, rows, q, fmt)
    Path(args.output).write_text(text, encoding="utf-8")
    out.write(json.dumps({"written": str(args.output), "rows": len(rows)}) + "\n")
    return EXIT_OK


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI file with a [qeuler] section")
    common.add_argument("--backend", choices=["float", "exact"])
    common.add_argument("--q", help="q as a complex literal (0.5, 0.4+0.3i) or a rational (1/2)")
    common.add_argument("--D", dest="root_den", type=int, help="root denominator: t = q^(1/D)")
    common.add_argument("--max-terms", type=int)
    common.add_argument("--abs-tol", type=float, help="series tail tolerance")
    common.add_argument("--tol", type=float, help="relative tolerance for float identity checks")
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "text"])
    common.add_argument("--seed", type=int)

    p = argparse.ArgumentParser(prog="qeuler", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", parents=[common], help="evaluate one value")
    pe.add_argument("kind", choices=["qeuler", "zeta", "ssum", "euler-classical"])
    pe.add_argument("--n", type=int, default=0)
    pe.add_argument("--r", type=int, default=1)
    pe.add_argument("--x")
    pe.add_argument("--s", default="2")
    pe.add_argument("--i", type=int, default=0)
    pe.add_argument("--a", type=int, default=1)
    pe.add_argument("--base-power", type=int, default=1, help="S-sum base is q^BASE_POWER")
    pe.add_argument("--method", choices=["closed", "single", "multi"])
    pe.add_argument("--ssum-method", choices=["collapsed", "direct"], default="collapsed")
    pe.add_argument("--gaussian", action="store_true",
                    help="Gaussian-binomial weights instead of tuple counts")
    pe.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", parents=[common], help="verify an identity over a grid")
    pv.add_argument("identity", choices=sorted(_GRID_AXES))
    for ax in ("a", "b", "n", "m", "r", "x", "y", "s"):
        pv.add_argument(f"--{ax}", help="value, list 'u,v,w' or integer range 'lo..hi'")
    pv.add_argument("--sample", type=int, help="check a seeded random subset of the grid")
    pv.add_argument("--unchecked", action="store_true", help="allow even a or b")
    pv.add_argument("--perturb", type=float, help="add this amount to every right-hand side")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", parents=[common], help="tabulate values to a file")
    pt.add_argument("kind", choices=["qeuler", "zeta", "ssum", "euler-classical"])
    pt.add_argument("--n", default="0..5")
    pt.add_argument("--r")
    pt.add_argument("--x")
    pt.add_argument("--s")
    pt.add_argument("--a")
    pt.add_argument("--base-power", type=int, default=1)
    pt.add_argument("--output", "-o", required=True)
    pt.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg, out)
    except (QEulerError, ValueError, ArithmeticError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
