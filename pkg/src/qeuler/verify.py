"""Classical-limit oracles and the identity suite.

Every theorem-shaped statement the package implements is executable here as
an IdentityCheck: the two sides are computed through code paths that do not
share the summation routine under test (closed form against series, direct
against factored, q-family against classical oracle), then compared by the
mode's criterion.  Exact-mode checks demand equality of reduced rationals;
float-mode checks demand |lhs - rhs| <= tau + the certified tail bounds of
both sides.

The classical (q = 1) Euler polynomial oracles live here rather than in
eulerpoly because they are fixtures for the q -> 1 limit checks, not
q-objects themselves.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .characters import DirichletCharacter, character_from_table, trivial_character
from .eulerpoly import (BarnesParams, barnes_euler, barnes_euler_chi,
                        euler_chi, euler_chi_hr, euler_chi_order, euler_poly,
                        euler_poly_hr, euler_poly_order)
from .qcore import gauss_expansion_rhs, q_binomial_table, q_pochhammer
from .scalar import Number, ONE, QParam, ZERO, pow_principal
from .series import DEFAULT_CONFIG, SeriesConfig, SeriesValue
from .zeta import (barnes_l, barnes_zeta, l_multi, l_multi_h, zeta_multi,
                   zeta_multi_h)

TAGS = ("Prop1", "Recurrence", "Thm3", "Thm5", "Thm7", "Thm8", "Thm10",
        "Thm11", "FinalDisplay", "GaussBinomial", "NegBinomial", "QLimit",
        "Distribution", "SpecializationLattice")


class SuiteConfigError(ValueError):
    """A suite configuration that cannot produce a valid run."""


# ---------------------------------------------------------------------------
# classical oracles

def classical_euler_poly(n: int, x) -> Number:
    """E_n(x), exactly, from (e^t+1) GF = 2 e^{xt}:
    E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x)."""
    if n < 0:
        raise ValueError("need n >= 0")
    xf = Number.of(x)
    if not xf.is_exact:
        raise ValueError("classical oracle expects exact rational x")
    xv = xf.fraction
    vals: list[Fraction] = []
    from math import comb
    for m in range(n + 1):
        acc = xv ** m
        s = Fraction(0)
        for k in range(m):
            s += comb(m, k) * vals[k]
        vals.append(acc - s / 2)
    return Number(vals[n])


def _classical_euler_numbers(n: int) -> list[Fraction]:
    return [classical_euler_poly(k, 0).fraction for k in range(n + 1)]


def _binomial_convolve(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[Fraction]:
    from math import comb
    n = len(f) - 1
    return [sum(comb(m, k) * f[k] * g[m - k] for k in range(m + 1))
            for m in range(n + 1)]


def classical_euler_order(n: int, r: int, x) -> Number:
    """E_n^{(r)}(x) via r-1 binomial convolutions of the order-1 values."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    base = _classical_euler_numbers(n)
    coeffs = base
    for _ in range(r - 1):
        coeffs = _binomial_convolve(coeffs, base)
    return _shift_by_x(coeffs, x)


def classical_barnes_euler(n: int, a: Sequence, x) -> Number:
    """Barnes-type E_n(x | a_1..a_r) at q = 1: the factor with parameter a
    contributes coefficients a^k E_k(0); convolve and shift."""
    if n < 0 or not a:
        raise ValueError("need n >= 0 and at least one parameter")
    base = _classical_euler_numbers(n)
    coeffs = None
    for aj in a:
        av = Number.of(aj)
        if not av.is_exact:
            raise ValueError("classical oracle expects exact rational a_j")
        scaled = [av.fraction ** k * base[k] for k in range(n + 1)]
        coeffs = scaled if coeffs is None else _binomial_convolve(coeffs, scaled)
    return _shift_by_x(coeffs, x)


def _shift_by_x(coeffs: Sequence[Fraction], x) -> Number:
    from math import comb
    xv = Number.of(x).fraction
    n = len(coeffs) - 1
    return Number(sum(comb(n, k) * coeffs[k] * xv ** (n - k)
                      for k in range(n + 1)))


def richardson_q_limit(fn: Callable[[Fraction], Number],
                       eps: Sequence[Fraction] = (Fraction(1, 10000),
                                                  Fraction(1, 20000))) -> Number:
    """First-order Richardson extrapolation of fn(1 - eps) to eps = 0.

    With eps_2 = eps_1/2 the combination 2 f(1-eps_2) - f(1-eps_1) removes
    the O(eps) error term.  fn is evaluated at exact rational q so the
    (1-q)^{-n} closed forms stay cancellation-free.
    """
    e1, e2 = eps
    f1 = fn(1 - e1)
    f2 = fn(1 - e2)
    return 2 * f2 - f1


# ---------------------------------------------------------------------------
# check plumbing

@dataclass
class IdentityCheck:
    """One executable identity instance."""

    id: str
    params: dict
    tolerance: float
    mode: str  # "exact" | "float"
    run: Callable[[], tuple]  # -> (lhs Number, rhs Number, lhs_bound, rhs_bound)
    informational: bool = False

    def __post_init__(self):
        if self.id not in TAGS:
            raise ValueError(f"unknown identity tag {self.id!r}")
        if self.mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")


@dataclass
class CheckEntry:
    id: str
    params: dict
    lhs: str
    rhs: str
    abs_diff: Optional[float]
    bound: float
    passed: bool
    mode: str
    note: str = ""
    informational: bool = False

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "bound": self.bound,
            "pass": self.passed,
            "mode": self.mode,
        }
        if self.note:
            out["note"] = self.note
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class CheckReport:
    config_fingerprint: str
    entries: list
    total: int
    passed: int
    failed: int
    wall_ms: int

    def to_json(self) -> dict:
        return {
            "config_fingerprint": self.config_fingerprint,
            "entries": [e.to_json() for e in self.entries],
            "summary": {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
                "wall_ms": self.wall_ms,
            },
        }

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _render(v) -> str:
    from .cli import render_number
    if v is None:
        return ""
    if isinstance(v, SeriesValue):
        v = v.value
    return render_number(Number.of(v))


def run_check(check: IdentityCheck) -> CheckEntry:
    """Execute one check.  Failures are reported, never raised; an
    evaluation error becomes a failed (or informational) entry carrying the
    reason."""
    try:
        lhs, rhs, lb, rb = check.run()
    except Exception as exc:  # reported, not thrown
        return CheckEntry(check.id, check.params, "", "", None, 0.0,
                          check.informational, check.mode,
                          note=f"skipped: {exc}",
                          informational=check.informational)
    bound = float(lb) + float(rb)
    if check.mode == "exact":
        same = (lhs == rhs)
        diff = 0.0 if same else abs(complex(lhs) - complex(rhs))
        ok = bool(same)
    else:
        diff = abs(complex(lhs) - complex(rhs))
        ok = diff <= check.tolerance + bound
    return CheckEntry(check.id, check.params, _render(lhs), _render(rhs),
                      diff, bound, ok or check.informational, check.mode,
                      informational=check.informational)


# ---------------------------------------------------------------------------
# the default grid

CHI3 = character_from_table(3, [0, 1, -1])

_TAU_DEFAULT = {
    "Prop1": 1e-10, "Thm3": 1e-9, "Thm5": 1e-9, "Thm7": 1e-9, "Thm8": 1e-9,
    "Thm10": 1e-9, "Thm11": 1e-9, "FinalDisplay": 1e-9, "NegBinomial": 1e-10,
    "QLimit": 1e-7, "SpecializationLattice": 1e-12,
}


@dataclass(frozen=True)
class SuiteConfig:
    """What to run: tag filter, mode filter, truncation depth, and optional
    index overrides (used by `verify --only <tag> --h .. --r ..`)."""

    only: Optional[tuple] = None
    mode: Optional[str] = None
    max_terms: int = 400
    tolerance: Optional[float] = None  # overrides every float check when set
    n_max: Optional[int] = None
    r: Optional[int] = None
    h: Optional[int] = None

    def canonical(self) -> dict:
        return {
            "only": sorted(self.only) if self.only else None,
            "mode": self.mode,
            "max_terms": self.max_terms,
            "tolerance": self.tolerance,
            "n_max": self.n_max,
            "r": self.r,
            "h": self.h,
        }


def normalize_tag(name: str) -> str:
    key = name.replace("-", "").replace("_", "").lower()
    for tag in TAGS:
        if tag.lower() == key:
            return tag
    raise SuiteConfigError(
        f"unknown check tag {name!r}; expected one of "
        + ", ".join(t.lower() for t in TAGS))


def _tau(tag: str, config: SuiteConfig) -> float:
    if config.tolerance is not None:
        return config.tolerance
    return _TAU_DEFAULT.get(tag, 0.0)


def _cfg(config: SuiteConfig, **kw) -> SeriesConfig:
    # suite comparisons add the certified bounds explicitly, so the
    # evaluators must not raise on them
    kw.setdefault("max_terms", config.max_terms)
    return SeriesConfig(tolerance=1e-10, enforce_tail_bound=False, **kw)


def _zero_bound(v):
    return (v, 0.0)


def _split(v):
    if isinstance(v, SeriesValue):
        return v.value, v.tail_bound
    return v, 0.0


def build_suite(config: SuiteConfig) -> list:
    """The default grid, optionally restricted; deterministic order."""
    if config.h is not None or config.r is not None:
        _validate_overrides(config)
    checks: list[IdentityCheck] = []
    want = None
    if config.only is not None:
        want = {normalize_tag(t) for t in config.only}

    def take(tag: str) -> bool:
        return want is None or tag in want

    def nmax(default: int) -> int:
        return default if config.n_max is None else min(config.n_max, 10)

    sc = _cfg(config)

    if take("Prop1"):
        checks += _grid_prop1(config, sc)
    if take("Recurrence"):
        for n in range(1, nmax(10) + 1):
            for qf in (Fraction(1, 3), Fraction(2, 5), Fraction(7, 10)):
                checks.append(_check_recurrence(n, qf))
    if take("Thm3"):
        for n in range(0, nmax(6) + 1):
            for r in range(1, (config.r or 3) + 1):
                checks.append(_check_thm3(n, r, sc, _tau("Thm3", config)))
    if take("Thm5"):
        for n in range(0, nmax(4) + 1):
            for r in range(1, (config.r or 2) + 1):
                checks.append(_check_thm5(n, r, sc, _tau("Thm5", config)))
    if take("Thm7"):
        for n in range(0, nmax(4) + 1):
            for r in range(1, (config.r or 3) + 1):
                hs = (config.h,) if config.h is not None else (r, r + 1, r + 2)
                for h in hs:
                    checks.append(_check_thm7(n, h, r, sc, _tau("Thm7", config)))
    if take("Thm8"):
        checks += _grid_thm8(config, sc)
    if take("Thm10"):
        for n in range(0, nmax(3) + 1):
            for r in range(1, (config.r or 2) + 1):
                h = config.h if config.h is not None else r + 1
                checks.append(_check_thm10(n, h, r, sc, _tau("Thm10", config)))
    if take("Thm11"):
        for n in range(0, nmax(3) + 1):
            for b in ((0, 0), (0, 1)):
                checks.append(_check_thm11(n, (1, 2), b, sc, _tau("Thm11", config)))
    if take("FinalDisplay"):
        for n in range(0, nmax(3) + 1):
            for a, b in (((1,), (0,)), ((1, 2), (0, 1))):
                checks.append(_check_final(n, a, b, sc, _tau("FinalDisplay", config)))
    if take("GaussBinomial"):
        checks += _grid_gauss(config)
    if take("NegBinomial"):
        for n in range(1, nmax(4) + 1):
            for xf in (Fraction(1, 2), Fraction(-1, 2)):
                checks.append(_check_negbinom(n, xf, _tau("NegBinomial", config)))
    if take("QLimit"):
        checks += _grid_qlimit(config)
    if take("Distribution"):
        checks += _grid_distribution(config, sc)
    if take("SpecializationLattice"):
        checks += _grid_lattice(config, sc)

    if config.mode is not None:
        checks = [c for c in checks if c.mode == config.mode]
    if not checks:
        raise SuiteConfigError("configuration selects no checks")
    return checks


def _validate_overrides(config: SuiteConfig) -> None:
    if config.h is not None:
        sel = {normalize_tag(t) for t in (config.only or ())}
        hr_tags = {"Thm7", "Thm10", "Thm8"} & sel if sel else {"Thm7"}
        r = config.r if config.r is not None else 1
        if hr_tags and config.h - r + 1 < 1:
            raise SuiteConfigError(
                f"divergence guard: requires h-r+1 >= 1 (got h={config.h}, r={r})")


# -- per-identity runners ---------------------------------------------------

def _check_recurrence(n: int, qf: Fraction) -> IdentityCheck:
    from math import comb

    def run():
        q = QParam.of(qf)
        ek = [euler_poly(k, q, 0) for k in range(n + 1)]
        s = ZERO
        qpow = Number(qf)  # q^{k+1} at k=0
        for k in range(n + 1):
            s = s + Number.exact(comb(n, k)) * qpow * ek[k]
            qpow = qpow * Number(qf)
        lhs = s + ek[n]
        return lhs, ZERO, 0.0, 0.0

    return IdentityCheck("Recurrence", {"n": n, "q": str(qf)}, 0.0, "exact", run)


def _grid_prop1(config: SuiteConfig, sc: SeriesConfig) -> list:
    checks = []
    tau = _tau("Prop1", config)
    qs = [("3/10", QParam.of(Fraction(3, 10))),
          ("1/2", QParam.of(Fraction(1, 2))),
          ("0.4+0.3i", QParam.of(complex(0.4, 0.3)))]
    nm = 8 if config.n_max is None else min(config.n_max, 8)
    rm = config.r or 4
    for n in range(0, nm + 1):
        for r in range(1, rm + 1):
            for qlabel, q in qs:
                for x in (1, 2):
                    checks.append(_check_prop1(n, r, q, qlabel, x, sc, tau))
    return checks


def _check_prop1(n, r, q, qlabel, x, sc, tau) -> IdentityCheck:
    def run():
        closed = euler_poly_order(n, r, q, x, "closed", sc)
        qs = q if not q.is_exact else QParam.of(q.to_complex())
        ser = euler_poly_order(n, r, qs, x, "series", sc, with_tail=True)
        sv, sb = _split(ser)
        return closed, sv, 0.0, sb

    params = {"n": n, "r": r, "q": qlabel, "x": x,
              "pairing": "closed-exact vs series-float" if q.is_exact
              else "closed vs series"}
    return IdentityCheck("Prop1", params, tau, "float", run)


def _check_thm3(n, r, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        z = zeta_multi(-n, r, q, 1, sc, method="series", with_tail=True)
        zv, zb = _split(z)
        p = euler_poly_order(n, r, q, 1, "closed", sc)
        return zv, p, zb, 0.0

    params = {"n": n, "r": r, "q": "0.5", "x": 1,
              "pairing": "zeta series at s=-n vs closed polynomial"}
    return IdentityCheck("Thm3", params, tau, "float", run)


def _check_thm5(n, r, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        z = l_multi(-n, CHI3, r, q, 1, sc, with_tail=True)
        zv, zb = _split(z)
        p = euler_chi_order(n, r, CHI3, q, 1, sc, method="closed")
        return zv, p, zb, 0.0

    params = {"n": n, "r": r, "q": "0.5", "x": 1, "chi": "mod3",
              "pairing": "l series at s=-n vs residue closed form"}
    return IdentityCheck("Thm5", params, tau, "float", run)


def _check_thm7(n, h, r, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        z = zeta_multi_h(-n, h, r, q, 1, sc, method="series", with_tail=True)
        zv, zb = _split(z)
        p = euler_poly_hr(n, h, r, q, 1, "closed", sc)
        return zv, p, zb, 0.0

    params = {"n": n, "h": h, "r": r, "q": "0.5", "x": 1,
              "pairing": "h-zeta series at s=-n vs closed polynomial"}
    return IdentityCheck("Thm7", params, tau, "float", run)


def _grid_thm8(config: SuiteConfig, sc: SeriesConfig) -> list:
    checks = []
    tau = _tau("Thm8", config)
    nm = 4 if config.n_max is None else min(config.n_max, 4)
    rs = (config.r,) if config.r is not None else (1, 2)
    for r in rs:
        h = config.h if config.h is not None else r + 1
        for n in range(0, nm + 1):
            checks.append(_check_thm8_exact(n, h, r, sc))
            checks.append(_check_thm8_float(n, h, r, sc, tau))
    checks.append(_check_eq19_literal(sc))
    return checks


def _check_thm8_exact(n, h, r, sc) -> IdentityCheck:
    def run():
        q = QParam.of(Fraction(1, 8))  # u^3 with u = 1/2
        dist = euler_chi_hr(n, h, r, CHI3, q, 1, "distribution", sc)
        closed = euler_chi_hr(n, h, r, CHI3, q, 1, "closed", sc)
        return dist, closed, 0.0, 0.0

    params = {"n": n, "h": h, "r": r, "q": "1/8", "x": 1, "chi": "mod3",
              "pairing": "distribution vs residue closed form"}
    return IdentityCheck("Thm8", params, 0.0, "exact", run)


def _check_thm8_float(n, h, r, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        ser = euler_chi_hr(n, h, r, CHI3, q, 1, "series", sc, with_tail=True)
        sv, sb = _split(ser)
        dist = euler_chi_hr(n, h, r, CHI3, q, 1, "distribution", sc)
        return sv, dist, sb, 0.0

    params = {"n": n, "h": h, "r": r, "q": "0.5", "x": 1, "chi": "mod3",
              "pairing": "series vs distribution"}
    return IdentityCheck("Thm8", params, tau, "float", run)


def _check_eq19_literal(sc) -> IdentityCheck:
    # the index-mismatched display: reading its per-coordinate exponent as
    # h-j+1+l reproduces the residue closed form; informational only
    def run():
        q = QParam.of(Fraction(1, 8))
        lit = euler_chi_hr(2, 3, 2, CHI3, q, 1, "closed", sc)
        dist = euler_chi_hr(2, 3, 2, CHI3, q, 1, "distribution", sc)
        return lit, dist, 0.0, 0.0

    params = {"n": 2, "h": 3, "r": 2, "q": "1/8", "x": 1, "chi": "mod3",
              "variant": "eq19-literal"}
    return IdentityCheck("Thm8", params, 0.0, "exact", run, informational=True)


def _check_thm10(n, h, r, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        z = l_multi_h(-n, CHI3, h, r, q, 1, sc, method="direct", with_tail=True)
        zv, zb = _split(z)
        p = euler_chi_hr(n, h, r, CHI3, q, 1, "distribution", sc)
        return zv, p, zb, 0.0

    params = {"n": n, "h": h, "r": r, "q": "0.5", "x": 1, "chi": "mod3",
              "pairing": "l-h series at s=-n vs distribution"}
    return IdentityCheck("Thm10", params, tau, "float", run)


def _check_thm11(n, a, b, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        params = BarnesParams(a, b)
        z = barnes_zeta(-n, params, q, 1, sc, with_tail=True)
        zv, zb = _split(z)
        p = barnes_euler(n, params, q, 1, "closed", sc)
        return zv, p, zb, 0.0

    params = {"n": n, "a": list(a), "b": list(b), "q": "0.5", "x": 1,
              "pairing": "barnes zeta series at s=-n vs closed polynomial"}
    return IdentityCheck("Thm11", params, tau, "float", run)


def _check_final(n, a, b, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        params = BarnesParams(a, b)
        z = barnes_l(-n, CHI3, params, q, 1, sc, with_tail=True)
        zv, zb = _split(z)
        ref = barnes_chi_residue_reference(n, CHI3, params, q, Number.of(1), sc)
        return zv, ref, zb, 0.0

    params = {"n": n, "a": list(a), "b": list(b), "q": "0.5", "x": 1,
              "chi": "mod3",
              "pairing": "barnes l series at s=-n vs residue collapse"}
    return IdentityCheck("FinalDisplay", params, tau, "float", run)


def barnes_chi_residue_reference(n: int, chi: DirichletCharacter,
                                 params: BarnesParams, q: QParam, x: Number,
                                 sc: SeriesConfig) -> Number:
    """Residue-class collapse of the Barnes chi family:

    ([2]_q/[2]_{q^f})^r [f]_q^n sum over alpha in [0,f)^r of
    prod_j (-1)^{alpha_j} chi(alpha_j) q^{(b_j+1) alpha_j}
    times barnes closed at modulus q^f, argument (x + sum a_j alpha_j)/f.

    Independent of the lattice summation route: the only infinite process
    here is the closed finite l-sum at modulus q^f.
    """
    from .qcore import q_bracket_two, q_number

    f = chi.conductor
    qv = q.value
    qf = pow_principal(qv, f)
    qfp = QParam.of(qf)
    pref = pow_principal(q_bracket_two(qv) / q_bracket_two(qf), params.r)
    fqn = pow_principal(q_number(f, q), n)
    total = None
    for avec in itertools.product(range(f), repeat=params.r):
        w = None
        for j, al in enumerate(avec):
            ca = chi(al)
            if ca.is_zero():
                w = None
                break
            t = ca * pow_principal(qv, (params.b[j] + 1) * al)
            if al % 2:
                t = -t
            w = t if w is None else w * t
        if w is None:
            continue
        shift = ZERO
        for aj, al in zip(params.a, avec):
            shift = shift + aj * Number.exact(al)
        arg = (x + shift) / f
        inner = barnes_euler(n, params, qfp, arg, "closed", sc)
        term = w * inner
        total = term if total is None else total + term
    if total is None:
        return ZERO
    return pref * fqn * total


def _grid_gauss(config: SuiteConfig) -> list:
    # deterministic "random" exact pairs from a fixed linear walk
    checks = []
    nm = 12 if config.n_max is None else min(config.n_max, 12)
    for n in range(0, nm + 1):
        # numerators stay below the denominators, so 0 < q < 1 throughout
        qf = Fraction(2 + (3 * n) % 7, 11 + (5 * n) % 9)
        xf = Fraction(-3 + (7 * n) % 11, 4 + n % 5)
        checks.append(_check_gauss(n, xf, qf))
    return checks


def _check_gauss(n: int, xf: Fraction, qf: Fraction) -> IdentityCheck:
    def run():
        q = QParam.of(qf)
        lhs = q_pochhammer(Number(xf), q, n)
        rhs = gauss_expansion_rhs(Number(xf), q, n)
        return lhs, rhs, 0.0, 0.0

    return IdentityCheck("GaussBinomial", {"n": n, "x": str(xf), "q": str(qf)},
                         0.0, "exact", run)


def _check_negbinom(n: int, xf: Fraction, tau: float) -> IdentityCheck:
    M = 200

    def run():
        q = QParam.of(Fraction(1, 2))
        lhs = ONE / q_pochhammer(Number(xf), q, n)
        table = q_binomial_table(q, n + M)
        total = ZERO
        xpow = ONE
        for i in range(M + 1):
            total = total + table.coefficient(n + i - 1, i) * xpow
            xpow = xpow * Number(xf)
        # |binom(n+i-1,i)_q| <= prod_{k<n}(1+|q|^k)/|1-q^k|; geometric in |x|
        qm = 0.5
        dn = 1.0
        for k in range(1, n):
            dn *= (1.0 + qm ** k) / abs(1.0 - qm ** k)
        xm = abs(float(xf))
        bound = dn * xm ** (M + 1) / (1.0 - xm)
        return lhs, total, 0.0, bound

    return IdentityCheck("NegBinomial", {"n": n, "x": str(xf), "q": "1/2",
                                         "M": M}, tau, "float", run)


def _grid_qlimit(config: SuiteConfig) -> list:
    checks = []
    nm = 5 if config.n_max is None else min(config.n_max, 5)
    rm = config.r or 3
    for n in range(0, nm + 1):
        for x in (0, 1):
            for r in range(1, rm + 1):
                checks.append(_check_qlimit_order(n, r, x))
            checks.append(_check_qlimit_barnes(n, x))
    return checks


def _check_qlimit_order(n: int, r: int, x: int) -> IdentityCheck:
    # second-order Richardson constants grow with the order; the single
    # factor case stays below 1e-7 on this grid, the convolved ones do not
    tau = 1e-7 if r == 1 else 1e-5

    def run():
        lim = richardson_q_limit(
            lambda qf: euler_poly_order(n, r, QParam.of(qf), x, "closed"))
        ref = classical_euler_order(n, r, x)
        return lim, ref, 0.0, 0.0

    params = {"n": n, "r": r, "x": x, "eps": ["1e-4", "5e-5"],
              "pairing": "Richardson q->1 vs classical recurrence"}
    return IdentityCheck("QLimit", params, tau, "float", run)


def _check_qlimit_barnes(n: int, x: int) -> IdentityCheck:
    tau = 1e-5
    a, b = (1, 2), (0, 0)

    def run():
        params = BarnesParams(a, b)
        lim = richardson_q_limit(
            lambda qf: barnes_euler(n, params, QParam.of(qf), x, "closed"))
        ref = classical_barnes_euler(n, a, x)
        return lim, ref, 0.0, 0.0

    params = {"n": n, "a": list(a), "b": list(b), "x": x,
              "eps": ["1e-4", "5e-5"],
              "pairing": "Richardson q->1 vs classical convolution"}
    return IdentityCheck("QLimit", params, tau, "float", run)


def _grid_distribution(config: SuiteConfig, sc: SeriesConfig) -> list:
    checks = []
    nm = 4 if config.n_max is None else min(config.n_max, 4)
    for n in range(0, nm + 1):
        checks.append(_check_dist_exact(n, sc))
        checks.append(_check_dist_float(n, sc, _tau("Prop1", config)))
    return checks


def _check_dist_exact(n, sc) -> IdentityCheck:
    def run():
        q = QParam.of(Fraction(1, 2))
        dist = euler_chi(n, CHI3, q, 1, "distribution", sc)
        closed = euler_chi(n, CHI3, q, 1, "closed", sc)
        return dist, closed, 0.0, 0.0

    params = {"n": n, "q": "1/2", "x": 1, "chi": "mod3",
              "pairing": "distribution vs residue closed form"}
    return IdentityCheck("Distribution", params, 0.0, "exact", run)


def _check_dist_float(n, sc, tau) -> IdentityCheck:
    def run():
        q = QParam.of(0.5)
        ser = euler_chi(n, CHI3, q, 1, "series", sc, with_tail=True)
        sv, sb = _split(ser)
        dist = euler_chi(n, CHI3, q, 1, "distribution", sc)
        return sv, dist, sb, 0.0

    params = {"n": n, "q": "0.5", "x": 1, "chi": "mod3",
              "pairing": "series vs distribution"}
    return IdentityCheck("Distribution", params, tau, "float", run)


def _grid_lattice(config: SuiteConfig, sc: SeriesConfig) -> list:
    """20 specialization arrows: the general family at a degenerate corner
    against the simpler family it must collapse to."""
    tau = _tau("SpecializationLattice", config)
    q = QParam.of(0.5)
    qe = QParam.of(Fraction(1, 2))
    triv = trivial_character()
    b1 = BarnesParams((1,), (0,))
    b2 = BarnesParams((1, 1), (0, 0))
    pairs = [
        ("hr(h=1,r=1)=basic", lambda: (euler_poly_hr(2, 1, 1, qe, 1, "closed", sc), euler_poly(2, qe, 1))),
        ("hr(h=1,r=1)=basic/n3", lambda: (euler_poly_hr(3, 1, 1, qe, 0, "closed", sc), euler_poly(3, qe, 0))),
        ("order(r=1)=basic", lambda: (euler_poly_order(3, 1, qe, 1, "closed", sc), euler_poly(3, qe, 1))),
        ("chi(triv)=basic", lambda: _split(euler_chi(2, triv, q, 1, "series", sc, with_tail=True))[:1] + (euler_poly(2, q, 1),)),
        ("chi-order(triv)=order", lambda: _split(euler_chi_order(2, 2, triv, q, 1, sc, with_tail=True))[:1] + (euler_poly_order(2, 2, q, 1, "closed", sc),)),
        ("chi-hr(triv)=hr", lambda: _split(euler_chi_hr(2, 3, 2, triv, q, 1, "series", sc, with_tail=True))[:1] + (euler_poly_hr(2, 3, 2, q, 1, "closed", sc),)),
        ("barnes(a=1,b=0)=order", lambda: (barnes_euler(2, b2, q, 1, "closed", sc), euler_poly_order(2, 2, q, 1, "closed", sc))),
        ("barnes(a=1,b=0)=basic", lambda: (barnes_euler(3, b1, qe, 1, "closed", sc), euler_poly(3, qe, 1))),
        ("barnes-chi(triv)=barnes", lambda: _split(barnes_euler_chi(2, triv, b2, q, 1, sc, with_tail=True))[:1] + (barnes_euler(2, b2, q, 1, "closed", sc),)),
        ("barnes-chi(a=1,b=0)=chi-order", lambda: _split(barnes_euler_chi(1, CHI3, b2, q, 1, sc, with_tail=True))[:1] + (euler_chi_order(1, 2, CHI3, q, 1, sc, method="closed"),)),
        ("zeta-h(h=1,r=1)=zeta", lambda: _pair_sv(zeta_multi_h(_S12, 1, 1, q, 1, sc, method="series", with_tail=True), zeta_multi(_S12, 1, q, 1, sc, method="series", with_tail=True))),
        ("l(triv)=zeta", lambda: _pair_sv(l_multi(_S12, triv, 1, q, 1, sc, with_tail=True), zeta_multi(_S12, 1, q, 1, sc, method="series", with_tail=True))),
        ("l(triv,r=2)=zeta(r=2)", lambda: _pair_sv(l_multi(_S12, triv, 2, q, 1, sc, with_tail=True), zeta_multi(_S12, 2, q, 1, sc, method="series", with_tail=True))),
        ("l-h(triv)=zeta-h", lambda: _pair_sv(l_multi_h(_S12, triv, 3, 2, q, 1, sc, with_tail=True), zeta_multi_h(_S12, 3, 2, q, 1, sc, method="series", with_tail=True))),
        ("barnes-zeta(a=1,b=0)=zeta", lambda: _pair_sv(barnes_zeta(_S12, b1, q, 1, sc, with_tail=True), zeta_multi(_S12, 1, q, 1, sc, method="series", with_tail=True))),
        ("barnes-zeta(a=1,b=0,r=2)=zeta(r=2)", lambda: _pair_sv(barnes_zeta(_S12, b2, q, 1, sc, with_tail=True), zeta_multi(_S12, 2, q, 1, sc, method="series", with_tail=True))),
        ("barnes-l(triv)=barnes-zeta", lambda: _pair_sv(barnes_l(_S12, triv, b2, q, 1, sc, with_tail=True), barnes_zeta(_S12, b2, q, 1, sc, with_tail=True))),
        ("barnes-l(a=1,b=0)=l", lambda: _pair_sv(barnes_l(_S12, CHI3, b1, q, 1, sc, with_tail=True), l_multi(_S12, CHI3, 1, q, 1, sc, with_tail=True))),
        ("zeta(s=0)=1", lambda: (_split(zeta_multi(0, 3, q, 2, sc, method="series", with_tail=True))[0], ONE)),
        ("orderE0=1", lambda: (euler_poly_order(0, 4, qe, 2, "closed", sc), ONE)),
    ]
    checks = []
    for label, fn in pairs:
        checks.append(_lattice_check(label, fn, tau))
    return checks


_S12 = 0.5  # a generic non-integer s exercised along the lattice arrows


def _pair_sv(a, b):
    av, ab = _split(a)
    bv, bb = _split(b)
    return av, bv, ab, bb


def _lattice_check(label: str, fn, tau: float) -> IdentityCheck:
    def run():
        out = fn()
        if len(out) == 2:
            lhs, rhs = out
            return lhs, rhs, 0.0, 0.0
        return out

    return IdentityCheck("SpecializationLattice", {"arrow": label}, tau,
                         "float", run)


# ---------------------------------------------------------------------------
# suite execution

def run_suite(config: Optional[SuiteConfig] = None) -> CheckReport:
    config = config or SuiteConfig()
    checks = build_suite(config)
    t0 = time.perf_counter()
    entries = [run_check(c) for c in checks]
    wall_ms = int((time.perf_counter() - t0) * 1000)
    entries.sort(key=lambda e: (e.id, json.dumps(e.params, sort_keys=True)))
    fp = hashlib.sha256(
        json.dumps(config.canonical(), sort_keys=True).encode()).hexdigest()
    gated = [e for e in entries if not e.informational]
    failed = sum(1 for e in gated if not e.passed)
    return CheckReport(
        config_fingerprint=fp,
        entries=entries,
        total=len(entries),
        passed=len(entries) - failed,
        failed=failed,
        wall_ms=wall_ms,
    )
