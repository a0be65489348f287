"""Command line front end.

Three subcommands:

* ``eval``   -- one family at one parameter point
* ``table``  -- the same evaluator over n/s and x ranges
* ``verify`` -- the identity suite, reported as JSON/CSV/plain

Exit codes: 0 success, 1 failed verification checks, 2 argument or
configuration errors (the diagnostic names the offending flag), 3 a
divergence guard or certification failure during evaluation.

Number literals: ``3``, ``3/10``, ``0.25``, ``0.4+0.3i``.  Rendering is the
inverse: exact values print as ``p/q``, floats as ``a+bi`` with shortest
round-trip digits, so ``parse(render(v)) == v`` for exact and double
precision values.  ``--digits`` overrides the digit count; high-precision
payloads (``--mode float:BITS``) render at their own working precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Optional

import mpmath

from .characters import parse_character
from .eulerpoly import (BarnesParams, barnes_euler, barnes_euler_chi,
                        euler_chi, euler_chi_hr, euler_chi_order, euler_poly,
                        euler_poly_hr, euler_poly_order)
from .scalar import ExactModeError, Number, QParam, to_float
from .series import (DivergenceError, SeriesConfig, SeriesValue,
                     TailBoundError, TermCapError)
from .zeta import (barnes_l, barnes_zeta, l_multi, l_multi_h, zeta_multi,
                   zeta_multi_h)

POLY_FAMILIES = ("basic", "order-r", "hr", "chi", "chi-order-r", "chi-hr",
                 "barnes", "barnes-chi")
ZETA_FAMILIES = ("zeta", "zeta-h", "l", "l-h", "barnes-zeta", "barnes-l")
FAMILIES = POLY_FAMILIES + ZETA_FAMILIES

_NEEDS_H = ("hr", "chi-hr", "zeta-h", "l-h")
_NEEDS_CHI = ("chi", "chi-order-r", "chi-hr", "barnes-chi", "l", "l-h",
              "barnes-l")
_NEEDS_BARNES = ("barnes", "barnes-chi", "barnes-zeta", "barnes-l")


class CLIUsageError(Exception):
    """Validation failure; carries the offending flag name."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


# ---------------------------------------------------------------------------
# literals

_INT_RE = re.compile(r"[+-]?\d+\Z")


def parse_literal(text: str):
    """'3' -> int, '3/10' -> Fraction, '0.25' -> float, '0.4+0.3i' -> complex."""
    t = text.strip()
    if not t:
        raise ValueError("empty numeric literal")
    if _INT_RE.match(t):
        return int(t)
    if "/" in t:
        return Fraction(t)
    if "i" in t or "j" in t:
        try:
            return complex(t.replace("i", "j"))
        except ValueError:
            raise ValueError(f"bad complex literal {text!r}") from None
    return float(t)


def _float_parts(v: Number, digits):
    """(re_str, im_str or None, im_negative) at the payload's own precision."""
    z = v.value
    if isinstance(z, complex):
        if digits is None:
            fmt = repr
        else:
            fmt = lambda f: f"{f:.{digits}g}"
        if z.imag == 0.0:
            return fmt(z.real), None, False
        return fmt(z.real), fmt(abs(z.imag)), z.imag < 0
    d = digits if digits is not None else max(17, int(v.precision * 0.30103) + 2)
    with mpmath.workprec(v.precision):
        re_s = mpmath.nstr(z.real, d)
        if z.imag == 0:
            return re_s, None, False
        return re_s, mpmath.nstr(abs(z.imag), d), z.imag < 0


def render_number(v: Number, digits: int = None) -> str:
    if v.is_exact:
        fr = v.fraction
        if fr.denominator == 1:
            return str(fr.numerator)
        return f"{fr.numerator}/{fr.denominator}"
    re_s, im_s, neg = _float_parts(v, digits)
    if im_s is None:
        return re_s
    return f"{re_s}{'-' if neg else '+'}{im_s}i"


def _value_json(v: Number, digits: int = None) -> dict:
    out = {"display": render_number(v, digits)}
    if v.is_exact:
        fr = v.fraction
        out["num"] = fr.numerator
        out["den"] = fr.denominator
    else:
        z = complex(v)
        out["re"] = z.real
        out["im"] = z.imag
    return out


def parse_mode(text: str) -> tuple:
    t = text.strip().lower()
    if t == "exact":
        return ("exact", None)
    if t == "float":
        return ("float", 53)
    m = re.match(r"float:(\d+)\Z", t)
    if m:
        bits = int(m.group(1))
        if bits < 24 or bits > 10000:
            raise ValueError("precision out of range")
        return ("float", bits)
    raise ValueError(f"bad mode {text!r}; expected exact or float[:BITS]")


def parse_barnes(text: str) -> BarnesParams:
    """'a=1,2;b=0,0' -> BarnesParams."""
    fields = {}
    for part in text.strip().split(";"):
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad barnes segment {part!r}")
        key, _, val = part.partition("=")
        fields[key.strip()] = val.strip()
    if set(fields) != {"a", "b"}:
        raise ValueError("barnes spec needs exactly a=... and b=...")
    a = tuple(parse_literal(s) for s in fields["a"].split(","))
    b = tuple(parse_literal(s) for s in fields["b"].split(","))
    return BarnesParams(a, b)


def _coerce(value, mode: tuple, flag: str, raw: str) -> Number:
    kind, bits = mode
    if kind == "exact":
        if isinstance(value, complex):
            raise CLIUsageError(flag, "exact mode accepts rational values only")
        if isinstance(value, float):
            # decimal strings stay exact: 0.3 means 3/10
            return Number(Fraction(raw.strip()))
        return Number.exact(value)
    num = Number.of(value)
    if bits == 53:
        if num.is_exact:
            return Number.of(complex(num))
        return num
    if isinstance(value, float):
        # reread the literal exactly so widening does not bake in float64 error
        num = Number.exact(Fraction(raw.strip()))
    return to_float(num, bits)


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> tuple:
    p = argparse.ArgumentParser(
        prog="qeuler",
        description="q-Euler polynomial families and their zeta interpolations")
    sub = p.add_subparsers(dest="command", required=True)
    subparsers = {}

    def common(sp, table=False):
        sp.add_argument("--family", required=True, choices=FAMILIES)
        sp.add_argument("--n", help="polynomial degree" + (" or range a..b" if table else ""))
        sp.add_argument("--s", help="zeta argument" + (" or comma list" if table else ""))
        sp.add_argument("--r", help="order (number of summation coordinates)")
        sp.add_argument("--h", help="weight parameter for the (h,r) families")
        sp.add_argument("--q", required=True, help="base, 0 < |q| < 1")
        sp.add_argument("--x", help="argument" + (" or comma list" if table else ""))
        sp.add_argument("--character", help="Dirichlet data, e.g. f=3;values=0,1,-1")
        sp.add_argument("--barnes", help="Barnes data, e.g. a=1,2;b=0,0")
        sp.add_argument("--method", help="evaluation route where the family offers several")
        sp.add_argument("--mode", default="float:53", help="exact or float[:BITS]")
        sp.add_argument("-M", "--max-terms", dest="M", type=int, default=400)
        sp.add_argument("--tolerance", type=float, default=1e-10)
        sp.add_argument("--digits", type=int,
                        help="significant digits for float rendering "
                             "(default: shortest round-trip)")
        sp.add_argument("--format", choices=("json", "csv", "plain"),
                        default="plain")
        sp.add_argument("--config", help="JSON file of defaults, same keys as flags")

    pe = sub.add_parser("eval", help="evaluate one family at one point")
    common(pe)
    pe.set_defaults(func=cmd_eval)
    subparsers["eval"] = pe

    pt = sub.add_parser("table", help="tabulate a family over ranges")
    common(pt, table=True)
    pt.set_defaults(func=cmd_table)
    subparsers["table"] = pt

    pv = sub.add_parser("verify", help="run the identity suite")
    pv.add_argument("--suite", default="default")
    pv.add_argument("--only", help="restrict to one check tag, e.g. thm7")
    pv.add_argument("--n-max", dest="n_max", type=int)
    pv.add_argument("--r", type=int)
    pv.add_argument("--h", type=int)
    pv.add_argument("--mode", choices=("exact", "float"),
                    help="restrict to checks of one comparison mode")
    pv.add_argument("-M", "--max-terms", dest="M", type=int, default=400)
    pv.add_argument("--tau", type=float,
                    help="override every float check tolerance")
    pv.add_argument("--format", choices=("json", "csv", "plain"),
                    default="json")
    pv.add_argument("--config", help="JSON file of defaults, same keys as flags")
    pv.set_defaults(func=cmd_verify)
    subparsers["verify"] = pv
    return p, subparsers


_CONFIG_KEYS = {"family", "n", "s", "r", "h", "q", "x", "character", "barnes",
                "method", "mode", "M", "max_terms", "tolerance", "digits",
                "format", "suite", "only", "n_max", "tau"}


def _apply_config_file(subparsers: dict, argv: list) -> None:
    # flags win over the file; the file only adjusts parser defaults
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    if not known.config:
        return
    try:
        with open(known.config) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIUsageError("--config", str(exc))
    if not isinstance(data, dict):
        raise CLIUsageError("--config", "expected a JSON object")
    bad = set(data) - _CONFIG_KEYS
    if bad:
        raise CLIUsageError("--config", f"unknown keys: {', '.join(sorted(bad))}")
    if "max_terms" in data:
        data["M"] = data.pop("max_terms")
    for sp in subparsers.values():
        acts = {a.dest: a for a in sp._actions}
        updates = {}
        for key, val in data.items():
            act = acts.get(key)
            if act is None:
                continue
            try:
                if act.type is int:
                    updates[key] = int(val)
                elif act.type is float:
                    updates[key] = float(val)
                else:
                    updates[key] = val if isinstance(val, str) else str(val)
            except (TypeError, ValueError):
                raise CLIUsageError("--config", f"{key}: bad value {val!r}")
            if act.choices is not None and updates[key] not in act.choices:
                raise CLIUsageError(
                    "--config",
                    f"{key}: invalid choice {val!r} (choose from "
                    f"{', '.join(map(str, act.choices))})")
            if act.required:
                # a config-supplied value satisfies a required flag
                act.required = False
        if updates:
            sp.set_defaults(**updates)


def _get_int(args, name: str, required: bool, default=None) -> Optional[int]:
    raw = getattr(args, name.lstrip("-").replace("-", "_"), None)
    if raw is None:
        if required:
            raise CLIUsageError(name, "required for this family")
        return default
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise CLIUsageError(name, f"expected an integer, got {raw!r}")


def _reject(args, name: str, family: str) -> None:
    attr = name.lstrip("-").replace("-", "_")
    if getattr(args, attr, None) is not None:
        raise CLIUsageError(name, f"not accepted by family {family!r}")


# ---------------------------------------------------------------------------
# evaluation core shared by eval and table

class _Job:
    """Validated parameters for one family evaluation."""

    def __init__(self, args):
        fam = args.family
        self.family = fam
        try:
            self.mode = parse_mode(args.mode)
        except ValueError as exc:
            raise CLIUsageError("--mode", str(exc))
        if args.M < 1:
            raise CLIUsageError("--max-terms", "must be at least 1")
        if args.tolerance < 0:
            raise CLIUsageError("--tolerance", "must be nonnegative")
        self.cfg = SeriesConfig(max_terms=args.M, tolerance=args.tolerance)
        self.is_zeta = fam in ZETA_FAMILIES

        try:
            qlit = parse_literal(args.q)
        except (ValueError, ZeroDivisionError) as exc:
            raise CLIUsageError("--q", str(exc))
        try:
            self.q = QParam.of(_coerce(qlit, self.mode, "--q", args.q))
        except (ValueError, ExactModeError) as exc:
            raise CLIUsageError("--q", str(exc))

        self.r = _get_int(args, "--r", required=False, default=1)
        if self.r is not None and self.r < 1:
            raise CLIUsageError("--r", "must be at least 1")
        if fam in _NEEDS_H:
            self.h = _get_int(args, "--h", required=True)
        else:
            _reject(args, "--h", fam)
            self.h = None

        if fam in _NEEDS_CHI:
            if not args.character:
                raise CLIUsageError("--character", f"required for family {fam!r}")
            try:
                self.chi = parse_character(args.character)
            except ValueError as exc:
                raise CLIUsageError("--character", str(exc))
        else:
            _reject(args, "--character", fam)
            self.chi = None

        if fam in _NEEDS_BARNES:
            if not args.barnes:
                raise CLIUsageError("--barnes", f"required for family {fam!r}")
            try:
                self.barnes = parse_barnes(args.barnes)
            except (ValueError, ZeroDivisionError) as exc:
                raise CLIUsageError("--barnes", str(exc))
            if getattr(args, "r", None) is not None and self.r != self.barnes.r:
                raise CLIUsageError("--r", "disagrees with the barnes parameter count")
            self.r = self.barnes.r
        else:
            _reject(args, "--barnes", fam)
            self.barnes = None

        self.method = args.method
        if self.method is not None and fam in ("basic", "barnes-chi", "l"):
            raise CLIUsageError("--method",
                                f"family {fam!r} has a single evaluation route")
        if self.method is None:
            self.method = _default_method(fam, self.mode[0])

    def parse_x(self, raw: Optional[str]) -> Number:
        if raw is None:
            if self.is_zeta:
                raise CLIUsageError("--x", "required for zeta families")
            return Number.exact(0)
        try:
            lit = parse_literal(raw)
            return _coerce(lit, self.mode, "--x", raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise CLIUsageError("--x", str(exc))

    def parse_s(self, raw: str) -> Number:
        try:
            lit = parse_literal(raw)
            return _coerce(lit, self.mode, "--s", raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise CLIUsageError("--s", str(exc))

    def evaluate(self, n: Optional[int], s: Optional[Number], x: Number):
        fam, q, cfg = self.family, self.q, self.cfg
        r, h, chi, bp = self.r, self.h, self.chi, self.barnes
        m = self.method
        if fam == "basic":
            return euler_poly(n, q, x), None
        if fam == "order-r":
            return _unpack(euler_poly_order(n, r, q, x, m, cfg, with_tail=True))
        if fam == "hr":
            return _unpack(euler_poly_hr(n, h, r, q, x, m, cfg, with_tail=True))
        if fam == "chi":
            return _unpack(euler_chi(n, chi, q, x, m, cfg, with_tail=True))
        if fam == "chi-order-r":
            return _unpack(euler_chi_order(n, r, chi, q, x, cfg, method=m,
                                           with_tail=True))
        if fam == "chi-hr":
            return _unpack(euler_chi_hr(n, h, r, chi, q, x, m, cfg,
                                        with_tail=True))
        if fam == "barnes":
            return _unpack(barnes_euler(n, bp, q, x, m, cfg, with_tail=True))
        if fam == "barnes-chi":
            return _unpack(barnes_euler_chi(n, chi, bp, q, x, cfg,
                                            with_tail=True))
        if fam == "zeta":
            return _unpack(zeta_multi(s, r, q, x, cfg, method=m, with_tail=True))
        if fam == "zeta-h":
            return _unpack(zeta_multi_h(s, h, r, q, x, cfg, method=m,
                                        with_tail=True))
        if fam == "l":
            return _unpack(l_multi(s, chi, r, q, x, cfg, with_tail=True))
        if fam == "l-h":
            return _unpack(l_multi_h(s, chi, h, r, q, x, cfg, method=m,
                                     with_tail=True))
        if fam == "barnes-zeta":
            return _unpack(barnes_zeta(s, bp, q, x, cfg, with_tail=True))
        if fam == "barnes-l":
            return _unpack(barnes_l(s, chi, bp, q, x, cfg, with_tail=True))
        raise CLIUsageError("--family", f"unknown family {fam!r}")


def _unpack(v):
    if isinstance(v, SeriesValue):
        return v.value, v.tail_bound
    return v, None


def _default_method(fam: str, mode_kind: str) -> Optional[str]:
    # in exact mode prefer the finite routes so small answers come out in
    # lowest terms instead of as truncated partial sums
    table = {
        "order-r": "closed", "hr": "closed", "barnes": "closed",
        "chi": "closed" if mode_kind == "exact" else "series",
        "chi-order-r": "closed" if mode_kind == "exact" else "series",
        "chi-hr": "distribution" if mode_kind == "exact" else "series",
        "zeta": "auto", "zeta-h": "auto", "l-h": "direct",
    }
    return table.get(fam)


# ---------------------------------------------------------------------------
# subcommands

def _get_digits(args) -> Optional[int]:
    d = getattr(args, "digits", None)
    if d is None:
        return None
    if not 1 <= d <= 5000:
        raise CLIUsageError("--digits", f"must be between 1 and 5000, got {d}")
    return d


def cmd_eval(args) -> int:
    job = _Job(args)
    if job.is_zeta:
        _reject(args, "--n", args.family)
        if args.s is None:
            raise CLIUsageError("--s", "required for zeta families")
        s = job.parse_s(args.s)
        n = None
    else:
        _reject(args, "--s", args.family)
        n = _get_int(args, "--n", required=True)
        if n < 0:
            raise CLIUsageError("--n", "must be nonnegative")
        s = None
    x = job.parse_x(args.x)
    value, bound = _run_job(job, args, n, s, x)
    _emit_eval(args, job, n, s, x, value, bound)
    return 0


def _run_job(job, args, n, s, x):
    try:
        return job.evaluate(n, s, x)
    except ValueError as exc:
        if isinstance(exc, (DivergenceError, TermCapError)):
            raise
        if isinstance(exc, ExactModeError):
            raise CLIUsageError("--mode", str(exc))
        raise CLIUsageError("--method" if args.method else "--family", str(exc))


def _emit_eval(args, job, n, s, x, value, bound) -> None:
    digits = _get_digits(args)
    if args.format == "plain":
        print(render_number(value, digits))
        return
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["value", "tail_bound"])
        w.writerow([render_number(value, digits),
                    "" if bound is None else repr(float(bound))])
        sys.stdout.write(buf.getvalue())
        return
    doc = {
        "family": job.family,
        "mode": args.mode,
        "params": _param_echo(args, job, n, s, x),
        "value": _value_json(value, digits),
    }
    if bound is not None:
        doc["tail_bound"] = float(bound)
    print(json.dumps(doc))


def _param_echo(args, job, n, s, x) -> dict:
    digits = _get_digits(args)
    out = {}
    if n is not None:
        out["n"] = n
    if s is not None:
        out["s"] = render_number(s, digits)
    out["r"] = job.r
    if job.h is not None:
        out["h"] = job.h
    out["q"] = args.q
    out["x"] = render_number(x, digits)
    if job.chi is not None:
        out["character"] = args.character
    if job.barnes is not None:
        out["barnes"] = args.barnes
    if job.method is not None:
        out["method"] = job.method
    out["max_terms"] = args.M
    out["tolerance"] = args.tolerance
    return out


def _parse_axis(raw: str, flag: str, as_int: bool, job=None):
    vals = []
    if ".." in raw:
        lo, _, hi = raw.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise CLIUsageError(flag, f"bad range {raw!r}")
        if b < a:
            raise CLIUsageError(flag, "range upper end below lower end")
        return list(range(a, b + 1)), [str(v) for v in range(a, b + 1)]
    for part in raw.split(","):
        part = part.strip()
        if as_int:
            try:
                vals.append(int(part))
            except ValueError:
                raise CLIUsageError(flag, f"expected integers, got {part!r}")
        else:
            vals.append(part)
    return vals, [str(v) for v in vals]


def cmd_table(args) -> int:
    job = _Job(args)
    digits = _get_digits(args)
    rows = []
    if job.is_zeta:
        _reject(args, "--n", args.family)
        if args.s is None:
            raise CLIUsageError("--s", "required for zeta families")
        axis_vals, axis_labels = _parse_axis(args.s, "--s", as_int=False)
        axis_name = "s"
    else:
        _reject(args, "--s", args.family)
        if args.n is None:
            raise CLIUsageError("--n", "required for polynomial families")
        axis_vals, axis_labels = _parse_axis(args.n, "--n", as_int=True)
        axis_name = "n"
        for v in axis_vals:
            if v < 0:
                raise CLIUsageError("--n", "must be nonnegative")
    if args.x is None:
        xs_raw = [None]
    else:
        xs_raw = [p.strip() for p in args.x.split(",")]
    header = [axis_name, "x", "value", "tail_bound"]
    for av, albl in zip(axis_vals, axis_labels):
        for xr in xs_raw:
            x = job.parse_x(xr)
            if job.is_zeta:
                value, bound = _run_job(job, args, None, job.parse_s(albl), x)
            else:
                value, bound = _run_job(job, args, av, None, x)
            rows.append([albl, render_number(x, digits),
                         render_number(value, digits),
                         "" if bound is None else repr(float(bound))])
    _emit_table(args, header, rows)
    return 0


def _emit_table(args, header, rows) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    if args.format == "json":
        doc = {"columns": header,
               "rows": [dict(zip(header, row)) for row in rows]}
        print(json.dumps(doc))
        return
    widths = [max(len(header[i]), max((len(r[i]) for r in rows), default=0))
              for i in range(len(header))]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


def cmd_verify(args) -> int:
    from .verify import SuiteConfig, SuiteConfigError, run_suite
    if args.suite != "default":
        raise CLIUsageError("--suite", f"unknown suite {args.suite!r}")
    if args.M < 1:
        raise CLIUsageError("--max-terms", "must be at least 1")
    try:
        config = SuiteConfig(
            only=(args.only,) if args.only else None,
            mode=args.mode,
            max_terms=args.M,
            tolerance=args.tau,
            n_max=args.n_max,
            r=args.r,
            h=args.h,
        )
        report = run_suite(config)
    except SuiteConfigError as exc:
        flag = "--h" if "divergence guard" in str(exc) else "--only"
        raise CLIUsageError(flag, str(exc))
    _emit_report(args, report)
    return 0 if report.ok else 1


def _emit_report(args, report) -> None:
    if args.format == "json":
        print(json.dumps(report.to_json()))
        return
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "params", "lhs", "rhs", "abs_diff", "bound",
                    "pass", "mode", "note"])
        for e in report.entries:
            w.writerow([e.id, json.dumps(e.params, sort_keys=True), e.lhs,
                        e.rhs, "" if e.abs_diff is None else repr(e.abs_diff),
                        repr(e.bound), str(e.passed).lower(), e.mode, e.note])
        sys.stdout.write(buf.getvalue())
        return
    for e in report.entries:
        tag = "PASS" if e.passed else "FAIL"
        if e.informational:
            tag = "INFO"
        extra = f"  [{e.note}]" if e.note else ""
        diff = "-" if e.abs_diff is None else f"{e.abs_diff:.3e}"
        print(f"{tag} {e.id} {json.dumps(e.params, sort_keys=True)} "
              f"diff={diff} bound={e.bound:.3e}{extra}")
    print(f"total={report.total} passed={report.passed} "
          f"failed={report.failed} wall_ms={report.wall_ms}")


# ---------------------------------------------------------------------------

def main(argv: Optional[list] = None) -> int:
    parser, subparsers = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        _apply_config_file(subparsers, list(argv))
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIUsageError as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2
    except ExactModeError as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2
    except (DivergenceError, TailBoundError, TermCapError) as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
