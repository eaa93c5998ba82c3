"""Command-line front end.

Every subcommand builds a :class:`RunRecord` and prints it as JSON, CSV or
text.  Exit codes: 0 when the run succeeded (possibly with warnings), 1 when
a computation failed or a verification did not pass, 2 for usage errors.

Physics values are printed in dimensionless form: a^2 <phi^2> for the
curved-space tasks and R0^2 <phi^2> for the flat-space one.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import dataclasses
import datetime as _dt
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from legsum import __version__
from legsum.errors import LegsumError, ParameterError
from legsum.types import ConicalPoint, EvalResult, Flag

TOOL = "legsum"


# --- run record ---------------------------------------------------------------


@dataclass
class Output:
    name: str
    value: float | complex
    abs_err: float


@dataclass
class Table:
    columns: list[str]
    rows: list[list]


@dataclass
class RunRecord:
    command: str
    inputs: dict[str, Any]
    outputs: list[Output] = field(default_factory=list)
    status: str = "ok"  # ok | warning | error
    provenance: dict[str, str] = field(default_factory=dict)
    table: Table | None = None
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in ("ok", "warning", "error"):
            raise ValueError(f"bad status {self.status!r}")
        if not self.provenance:
            self.provenance = _provenance()

    def add(self, name: str, value, abs_err: float = 0.0) -> None:
        self.outputs.append(Output(name, value, float(abs_err)))

    def warn(self, message: str) -> None:
        self.warnings.append(message)
        if self.status == "ok":
            self.status = "warning"

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": _encode(self.inputs),
            "outputs": [{"name": o.name, "value": _encode(o.value), "abs_err": _encode(o.abs_err)}
                        for o in self.outputs],
            "status": self.status,
            "provenance": self.provenance,
            "table": None if self.table is None else
            {"columns": self.table.columns, "rows": _encode(self.table.rows)},
            "warnings": self.warnings,
        }
        return json.dumps(doc, indent=2, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        d = json.loads(text)
        table = d.get("table")
        return cls(
            command=d["command"],
            inputs=_decode(d["inputs"]),
            outputs=[Output(o["name"], _decode(o["value"]), _decode(o["abs_err"])) for o in d["outputs"]],
            status=d["status"],
            provenance=d["provenance"],
            table=None if table is None else Table(table["columns"], _decode(table["rows"])),
            warnings=list(d.get("warnings", [])),
        )


def _provenance() -> dict[str, str]:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        when = _dt.datetime.fromtimestamp(int(epoch), _dt.timezone.utc)
    else:
        when = _dt.datetime.now(_dt.timezone.utc)
    return {"tool": TOOL, "version": __version__, "timestamp": when.isoformat(timespec="seconds")}


# JSON has no complex numbers or infinities; both get a tagged object.
def _encode(v):
    if isinstance(v, bool) or v is None or isinstance(v, (str, int)):
        return v
    if isinstance(v, complex):
        return {"re": _encode(v.real), "im": _encode(v.imag)}
    if isinstance(v, float):
        return v if math.isfinite(v) else {"float": repr(v)}
    if isinstance(v, dict):
        return {k: _encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    if hasattr(v, "item"):  # numpy scalar
        return _encode(v.item())
    return str(v)


def _decode(v):
    if isinstance(v, dict):
        if set(v) == {"re", "im"}:
            return complex(_decode(v["re"]), _decode(v["im"]))
        if set(v) == {"float"}:
            return float(v["float"])
        return {k: _decode(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_decode(x) for x in v]
    return v


# --- formatting ---------------------------------------------------------------


def _num(v, digits: int) -> str:
    if isinstance(v, complex):
        if v.imag == 0:
            return f"{v.real:.{digits}g}"
        return f"{v.real:.{digits}g}{v.imag:+.{digits}g}j"
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    return str(v)


def to_csv(rec: RunRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rec.table is not None:
        w.writerow(rec.table.columns)
        for row in rec.table.rows:
            w.writerow([_num(x, 17) for x in row])
    else:
        w.writerow(["name", "value", "abs_err"])
        for o in rec.outputs:
            w.writerow([o.name, _num(o.value, 17), _num(o.abs_err, 17)])
    return buf.getvalue()


def to_text(rec: RunRecord) -> str:
    lines = [f"{rec.command}: {rec.status}"]
    for o in rec.outputs:
        lines.append(f"  {o.name} = {_num(o.value, 8)} +/- {_num(o.abs_err, 2)}")
    if rec.table is not None:
        cells = [rec.table.columns] + [[_num(x, 8) for x in row] for row in rec.table.rows]
        widths = [max(len(r[j]) for r in cells) for j in range(len(rec.table.columns))]
        for r in cells:
            lines.append("  " + "  ".join(c.rjust(wd) for c, wd in zip(r, widths)))
    lines += [f"  warning: {m}" for m in rec.warnings]
    return "\n".join(lines) + "\n"


def render(rec: RunRecord, fmt: str) -> str:
    if fmt == "json":
        return rec.to_json() + "\n"
    if fmt == "csv":
        return to_csv(rec)
    return to_text(rec)


# --- shared argument helpers ----------------------------------------------------


def _point(mu: float, eta: float | None, u: float | None) -> ConicalPoint:
    if (eta is None) == (u is None):
        raise ParameterError("give exactly one of --eta and --u")
    if u is not None:
        if not u > 1:
            raise ParameterError(f"argument must satisfy u > 1, got u={u!r}")
        return ConicalPoint(mu, u, math.acosh(u))
    return ConicalPoint.from_eta(mu, eta)


def _scalar(text: str):
    t = text.strip()
    for conv in (int, float):
        try:
            return conv(t)
        except ValueError:
            pass
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        return t


def parse_params(items: list[str]) -> dict[str, Any]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise ParameterError(f"expected key=value, got {item!r}")
        out[key.strip()] = _scalar(val)
    return out


def read_config(path: str) -> dict[str, Any]:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise ParameterError(f"{path}:{n}: expected key = value")
            out[key.strip()] = val.strip()
    return out


def parse_radii(text: str, r0: float) -> list[float]:
    """Comma list of radii; each item is a number, ``r0`` or a product such as ``0.99*r0``."""
    out = []
    for item in str(text).split(","):
        v = 1.0
        for f in item.split("*"):
            f = f.strip()
            if f == "r0":
                v *= r0
            else:
                try:
                    v *= float(f)
                except ValueError:
                    raise ParameterError(f"cannot read radius {item!r}") from None
        out.append(v)
    return out


def _floats(text: str) -> list[float]:
    try:
        return [float(s) for s in str(text).split(",")]
    except ValueError:
        raise ParameterError(f"expected a comma-separated list of numbers, got {text!r}") from None


def _flag_warnings(rec: RunRecord, res: EvalResult, where: str = "") -> None:
    for f in sorted(res.flags - {Flag.CONVERGED}, key=lambda f: f.value):
        rec.warn(f"{f.value}{' at ' + where if where else ''}")


# --- legendre -----------------------------------------------------------------


def _legendre_value(kind: str, pt: ConicalPoint, arg: float) -> EvalResult:
    from legsum.specfun import legendre as lg

    if kind == "P_conical":
        return lg.legendre_p_conical(pt, arg)
    if kind == "Q_conical":
        return lg.legendre_q_conical(pt, arg)
    if kind == "P_real":
        return lg.legendre_p_real_degree(pt, arg)
    return lg.legendre_q_real_degree(pt, arg)


def _read_batch(path: str) -> list[tuple[float, float, float]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            cells = [c.strip() for c in line.split(",")]
            if len(cells) != 3:
                raise ParameterError(f"batch rows need mu,eta,z; got {line!r}")
            try:
                rows.append(tuple(float(c) for c in cells))
            except ValueError:
                if rows:
                    raise ParameterError(f"bad batch row {line!r}") from None
                # header line
    return rows


def cmd_legendre(args) -> RunRecord:
    inputs = {"kind": args.kind, "mu": args.mu, "eta": args.eta, "u": args.u,
              "z": args.z, "x": args.x, "batch": args.batch}
    rec = RunRecord("legendre", {k: v for k, v in inputs.items() if v is not None})
    if args.batch:
        rows = []
        for mu, eta, z in _read_batch(args.batch):
            r = _legendre_value(args.kind, ConicalPoint.from_eta(mu, eta), z)
            _flag_warnings(rec, r, f"mu={mu}, eta={eta}, z={z}")
            rows.append([mu, eta, z, r.value, r.abs_err])
        rec.table = Table(["mu", "eta", "z", "value", "abs_err"], rows)
        return rec
    if args.mu is None:
        raise ParameterError("--mu is required without --batch")
    if (args.z is None) == (args.x is None):
        raise ParameterError("give exactly one of --z and --x")
    pt = _point(args.mu, args.eta, args.u)
    arg = args.z if args.z is not None else args.x
    r = _legendre_value(args.kind, pt, arg)
    _flag_warnings(rec, r)
    rec.add(args.kind, r.value, r.abs_err)
    return rec


# --- zeros --------------------------------------------------------------------


def cmd_zeros(args) -> RunRecord:
    from legsum.zerofind import find_zeros

    pt = _point(args.mu, args.eta, args.u)
    rec = RunRecord("zeros", {"mu": args.mu, "eta": pt.eta, "kmax": args.kmax, "tol": args.tol})
    zs = find_zeros(pt, args.kmax, args.tol)
    rec.table = Table(["k", "z_k", "bracket_lo", "bracket_hi", "residual"],
                      [[z.k, z.z, z.bracket[0], z.bracket[1], z.residual] for z in zs])
    rec.inputs["method"] = zs.method.value
    return rec


# --- verify -------------------------------------------------------------------


def _take(p: dict, key: str, default=None, kind=float):
    if key in p:
        return kind(p.pop(key))
    if default is None:
        raise ParameterError(f"missing parameter {key}=...")
    return default


def _build_test_function(case: str, p: dict, pt: ConicalPoint):
    from legsum.sumengine import CATALOG

    if case not in CATALOG:
        raise ParameterError(f"unknown case {case!r}; choose from {', '.join(sorted(CATALOG))}")
    cls = CATALOG[case]
    growth = p.pop("c_growth", None)
    kwargs = {}
    for f in dataclasses.fields(cls):
        if f.name == "pt":
            kwargs["pt"] = pt
        elif f.name == "eta_ref":
            kwargs["eta_ref"] = pt.eta
        elif f.name == "pole_list" and "poles" in p:
            v = p.pop("poles")
            kwargs["pole_list"] = tuple(v if isinstance(v, list) else [v])
        elif f.name in p:
            kwargs[f.name] = int(p.pop(f.name)) if f.type == "int" else float(p.pop(f.name))
    if p:
        raise ParameterError(f"unused parameters for {case}: {', '.join(sorted(p))}")
    tf = cls(**kwargs)
    if growth is not None:
        tf.c_growth = float(growth)  # declared growth, checked by the admissibility report
    return tf


def _report_verdict(rec: RunRecord, v) -> None:
    d = v.as_dict()
    for key in ("lhs", "rhs_main", "rhs_residues", "rhs_axis", "rhs_imag_poles", "rhs_total"):
        if key in d:
            rec.add(key, complex(*d[key]))
    rec.add("residual", v.residual, v.component_err)
    rec.add("tail_bound", v.tail_bound)
    rec.add("k_used", float(v.k_used))
    for w in getattr(v, "warnings", []):
        rec.warn(w)
    rec.inputs["pass"] = bool(v.passed)
    if not v.passed:
        rec.status = "error"


def _sinc_power(n: int, beta: float):
    def f(z):
        w = beta * complex(z)
        s = 1 - w * w / 6 if abs(w) < 1e-4 else cmath.sin(w) / w
        return s**n
    return f


def cmd_verify(args) -> RunRecord:
    from legsum.sumengine import special as sp_
    from legsum.sumengine import verify_sum

    p = parse_params(args.params)
    rec = RunRecord("verify", {"suite": args.suite, "case": args.case, "variant": args.variant,
                               "tol": args.tol, **p})
    tol = args.tol
    suite, case = args.suite, args.case

    if suite == "sumformula":
        pt = ConicalPoint.from_eta(_take(p, "mu"), _take(p, "eta"))
        kmax = p.pop("kmax", args.kmax)
        tf = _build_test_function(case, p, pt)
        _report_verdict(rec, verify_sum(tf, pt, kmax, tol))
    elif suite == "half_integer":
        delta, l = _take(p, "delta", kind=int), _take(p, "l", kind=int)
        pt = ConicalPoint.from_eta(-l - 0.5 * delta, _take(p, "eta"))
        tf = _build_test_function(case, p, pt)
        _report_verdict(rec, sp_.verify_sum_half_integer(delta, l, tf, pt, tol, k_max=args.kmax))
    elif suite == "abel_plana":
        variant = args.variant or "integer"
        if case == "rational":
            a = _take(p, "a", 1.0)
            res = sp_.abel_plana(variant, lambda z: 1 / (z * z + a * a), tol, decay_power=2,
                                 imag_poles=[sp_.SimplePole(1j * a, -0.5j / a),
                                             sp_.SimplePole(-1j * a, 0.5j / a)])
        elif case == "exp":
            b = _take(p, "b", 1.0)
            res = sp_.abel_plana(variant, lambda z: cmath.exp(-b * z), tol, decay_rate=b)
        else:
            raise ParameterError("abel_plana cases: rational, exp")
        for k, v in res.components.items():
            rec.add(k, v)
        rec.add("rhs", res.value, res.abs_err)
        rec.add("direct", res.direct.value, res.direct.abs_err)
        rec.add("residual", res.residual)
        rec.inputs["pass"] = res.passed
        if not res.passed:
            rec.status = "error"
    elif suite == "bessel_sum":
        mu = _take(p, "mu", 0.0)
        if case == "rayleigh":
            r = sp_.rayleigh_check(mu, int(p.pop("kmax", 400)))
            exact = 1 / (4 * (mu + 1))
            rec.add("sum", r.value, r.abs_err)
            rec.add("exact", exact)
            ok = abs(r.value - exact) <= max(tol, 1e-6)
        elif case == "sinc":
            n, beta = _take(p, "N", 8, int), _take(p, "beta", 0.2)
            v = sp_.sum_bessel_zeros(_sinc_power(n, beta), mu, tol=tol, decay_power=n,
                                     period=math.pi / beta, growth=n * beta)
            d = v.as_dict()
            for key in ("lhs", "rhs_main", "rhs_residues", "rhs_axis", "rhs_total"):
                rec.add(key, complex(*d[key]))
            rec.add("residual", v.residual, v.component_err)
            ok = v.passed
        else:
            raise ParameterError("bessel_sum cases: sinc, rayleigh")
        rec.inputs["pass"] = ok
        if not ok:
            rec.status = "error"
    elif suite == "examples":
        l = _take(p, "l", 0, int)
        eta = _take(p, "eta", 1.5)
        pt = ConicalPoint.from_eta(-l - 0.5, eta)
        if case == "example1":
            m, n = _take(p, "m", 0, int), _take(p, "n", 0, int)
            alpha, c = _take(p, "alpha", 1.0), _take(p, "c", 1.0)
            closed = sp_.example1_closed_form(l, m, n, alpha, c, eta)
            tf = _build_test_function("rational_cos", {"alpha": alpha, "c": c, "m": m, "n": n}, pt)
            v = sp_.verify_sum_half_integer(1, l, tf, pt, tol, k_max=args.kmax)
            lhs = -v.lhs  # the rational-cosine series carries the opposite sign
            residual = abs(lhs - closed.value)
            rec.add("lhs", lhs, v.tail_bound)
            rec.add("closed_literal", closed.literal)
            rec.add("closed_axis_poles", closed.axis_poles)
            rec.add("closed_total", closed.value)
            rec.add("residual", residual, v.component_err)
            ok = residual <= 1e-8 + v.component_err
            for w in v.warnings:
                rec.warn(w)
            rec.inputs["pass"] = ok
            if not ok:
                rec.status = "error"
        elif case == "example2n":
            tf = _build_test_function("bessel_product", p, pt)
            _report_verdict(rec, sp_.verify_sum_half_integer(1, l, tf, pt, tol, k_max=args.kmax))
        else:
            raise ParameterError("examples cases: example1, example2n")
        p.clear()
    else:  # argparse restricts the choices
        raise ParameterError(f"unknown suite {suite!r}")
    if p:
        raise ParameterError(f"unused parameters: {', '.join(sorted(p))}")
    return rec


# --- casimir ------------------------------------------------------------------

_CFG_KEYS = {"a": float, "M": float, "xi": float, "r0": float, "lmax": int, "tol": float,
             "r": str, "R0": float, "R": str, "gamma": float, "dt": float, "ratios": str}


# a rounded 1/6 (e.g. 0.1666667) would otherwise make x_M imaginary at M = 0
_XI_SNAP = 1e-6


def _casimir_settings(args) -> dict[str, Any]:
    s: dict[str, Any] = {}
    if args.config:
        for k, v in read_config(args.config).items():
            k = "lmax" if k == "l_max" else k
            if k not in _CFG_KEYS:
                raise ParameterError(f"unknown config key {k!r}")
            s[k] = v
    for k in _CFG_KEYS:
        v = getattr(args, k, None)
        if v is not None:
            s[k] = v
    try:
        return {k: _CFG_KEYS[k](v) for k, v in s.items()}
    except ValueError as e:
        raise ParameterError(str(e)) from None


def cmd_casimir(args) -> RunRecord:
    from legsum import curvedcasimir as cc

    s = _casimir_settings(args)
    rec = RunRecord("casimir", {"task": args.task, **s})
    task = args.task
    cols = ["r", "value", "abs_err", "tail_bound"]

    if task in ("minkowski", "curvature_limit"):
        R0 = s.get("R0", 1.0)
        M = s.get("M", 0.0)
        tol = s.get("tol", 1e-10)
        if task == "minkowski":
            rows = []
            for R in parse_radii(s.get("R", "0"), R0):
                v = cc.phi2_minkowski_boundary(R0, R, M, tol, s.get("lmax", 80))
                _flag_warnings(rec, v, f"R={R}")
                rows.append([R, R0**2 * v.value, R0**2 * v.abs_err,
                             R0**2 * getattr(v, "tail_bound", 0.0)])
            rec.table = Table(cols, rows)
            rec.inputs["units"] = "R0^2 <phi^2>"
        else:
            ratios = tuple(_floats(s.get("ratios", "20,40,80")))
            R = parse_radii(s.get("R", "0"), R0)[0]
            out = cc.curvature_limit(R0, R, M, s.get("xi", 0.0), ratios, tol)
            keys = ["a_over_R0", "curved", "curved_err", "flat", "gap"]
            rec.table = Table(keys, [[row[k] for k in keys] for row in out])
            rec.inputs["units"] = "<phi^2> in 1/R0 length units"
            gaps = [row["gap"] for row in out]
            if any(g2 >= g1 for g1, g2 in zip(gaps, gaps[1:])):
                rec.warn("gaps do not decrease monotonically")
        return rec

    xi = s.get("xi", 0.0)
    if xi != 1 / 6 and abs(xi - 1 / 6) <= _XI_SNAP:
        rec.warn(f"xi = {xi} read as conformal coupling 1/6")
        xi = 1 / 6
    cfg = cc.CasimirConfig(a=s.get("a", 1.0), M=s.get("M", 0.0), xi=xi,
                           r0=s.get("r0", 1.0), l_max=s.get("lmax", 80), tol=s.get("tol", 1e-10))
    a2 = cfg.a**2
    rec.inputs["units"] = "a^2 <phi^2>"
    if task == "center":
        v = cc.phi2_center(cfg)
        _flag_warnings(rec, v)
        rec.table = Table(cols, [[0.0, a2 * v.value, a2 * v.abs_err, 0.0]])
    elif task == "phi2":
        rows = []
        for r in parse_radii(s.get("r", "0"), cfg.r0):
            v = cc.phi2_boundary(cfg, r)
            _flag_warnings(rec, v, f"r={r}")
            rows.append([r, a2 * v.value, a2 * v.abs_err, a2 * getattr(v, "tail_bound", 0.0)])
        rec.table = Table(cols, rows)
    elif task == "wightman":
        radii = parse_radii(s.get("r", "0.3,0.4"), cfg.r0)
        if len(radii) != 2:
            raise ParameterError("wightman needs --r r1,r2")
        p1 = cc.FieldPoint(radii[0])
        p2 = cc.FieldPoint(radii[1], theta=s.get("gamma", 0.0), t=-s.get("dt", 0.0))
        v = cc.wightman_boundary(cfg, p1, p2, euclidean=args.euclidean)
        _flag_warnings(rec, v)
        rec.table = Table(["r1", "r2", "value", "abs_err", "tail_bound"],
                          [[radii[0], radii[1], a2 * v.value, a2 * v.abs_err,
                            a2 * getattr(v, "tail_bound", 0.0)]])
    return rec


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--out", help="write the record here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("legendre", parents=[common], help="evaluate a Legendre function")
    p.add_argument("--kind", required=True, choices=["P_conical", "P_real", "Q_real", "Q_conical"])
    p.add_argument("--mu", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--u", type=float)
    p.add_argument("--z", type=float)
    p.add_argument("--x", type=float)
    p.add_argument("--batch", help="file of mu,eta,z rows")
    p.set_defaults(run=cmd_legendre)

    p = sub.add_parser("zeros", parents=[common], help="tabulate zeros of the conical function")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--eta", type=float)
    p.add_argument("--u", type=float)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-13)
    p.set_defaults(run=cmd_zeros)

    p = sub.add_parser("verify", parents=[common], help="check a summation identity")
    p.add_argument("--suite", required=True,
                   choices=["sumformula", "half_integer", "abel_plana", "bessel_sum", "examples"])
    p.add_argument("--case", required=True)
    p.add_argument("--variant", choices=["integer", "half_integer"])
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--kmax", type=int)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("casimir", parents=[common], help="vacuum polarization inside a sphere")
    p.add_argument("task", choices=["phi2", "center", "wightman", "minkowski", "curvature_limit"])
    p.add_argument("--config", help="key = value file; flags override it")
    for name in ("a", "M", "xi", "r0", "tol", "R0", "gamma", "dt"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--lmax", type=int)
    p.add_argument("--r", help="radius list, e.g. 0.2,0.5,0.99*r0")
    p.add_argument("--R", help="flat-space radius list")
    p.add_argument("--ratios", help="a/R0 values for curvature_limit")
    p.add_argument("--euclidean", action="store_true", help="read dt as imaginary time")
    p.set_defaults(run=cmd_casimir)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec = args.run(args)
        code = 1 if rec.status == "error" else 0
    except ParameterError as e:
        print(f"{TOOL}: error [{getattr(e, 'code', 'parameter')}]: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"{TOOL}: error: {e}", file=sys.stderr)
        return 2
    except (LegsumError, ArithmeticError) as e:
        rec = RunRecord(args.command, {k: v for k, v in vars(args).items()
                                       if k not in ("run", "format", "out") and v is not None})
        rec.status = "error"
        rec.warnings.append(f"{type(e).__name__}: {e}")
        code = 1
    text = render(rec, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
