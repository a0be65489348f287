"""The q-Euler polynomial families.

Eight families share one computational skeleton: a finite alternating
closed form in l (degree-many terms, exact-capable) and an infinite
weighted series in m (truncated, tail-certified).  The closed forms run in
whatever arithmetic lane the operands span; double-precision series run
through the kernel backend, exact and high-precision series through a
generic scalar loop.

Method strings are lowercase: "closed", "series", "distribution".  The
distribution method rewrites a character-twisted family over residue
classes mod the conductor f, delegating to the plain family at modulus q^f
and argument (x+a)/f; it is finite, so it carries no truncation error.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import series as srs
from .characters import DirichletCharacter, character_convolution
from .qcore import q_bracket_two, q_number, q_pochhammer
from .scalar import (ExactModeError, Number, NumberLike, ONE, QParam, ZERO,
                     pow_principal)
from .series import (DEFAULT_CONFIG, DivergenceError, SeriesConfig,
                     SeriesValue, TailBoundError)

__all__ = [
    "BarnesParams", "EulerFamilySpec", "euler_poly", "euler_poly_order",
    "euler_poly_hr", "euler_chi", "euler_chi_order", "euler_chi_hr",
    "barnes_euler", "barnes_euler_chi",
]


@dataclass(frozen=True)
class BarnesParams:
    """Parameter vectors (a_1..a_r; b_1..b_r) of the Barnes-type family.

    Every a_j must have positive real part; the b_j are integers (the
    series representations additionally need b_j >= 0 to converge).
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(Number.of(v) for v in self.a)
        b = []
        for v in self.b:
            if int(v) != v:
                raise ValueError(f"b_j must be an integer, got {v!r}")
            b.append(int(v))
        b = tuple(b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) == 0 or len(a) != len(b):
            raise ValueError("a and b must be nonempty and of equal length")
        for v in a:
            if not v.to_complex().real > 0:
                raise ValueError(f"a_j = {v!r} must have positive real part")

    @property
    def r(self) -> int:
        return len(self.a)

    def require_series_weights(self) -> None:
        # series convergence: each coordinate weight ratio is |q|^{b_j+1}
        for bj in self.b:
            if bj < 0:
                raise DivergenceError(
                    f"series form needs every b_j >= 0, got b_j = {bj}")


_FAMILIES = ("basic", "order-r", "hr", "chi", "chi-order-r", "chi-hr",
             "barnes", "barnes-chi")


@dataclass(frozen=True)
class EulerFamilySpec:
    """Which family and which indices: the dispatch record used by the CLI
    and the verification suite."""

    family: str
    n: int
    r: int = 1
    h: Optional[int] = None
    chi: Optional[DirichletCharacter] = None
    barnes: Optional[BarnesParams] = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0 or self.r < 1:
            raise ValueError("need n >= 0 and r >= 1")
        needs_h = self.family in ("hr", "chi-hr")
        if needs_h and self.h is None:
            raise ValueError(f"family {self.family} requires h")
        needs_chi = self.family in ("chi", "chi-order-r", "chi-hr", "barnes-chi")
        if needs_chi and self.chi is None:
            raise ValueError(f"family {self.family} requires a character")
        needs_b = self.family in ("barnes", "barnes-chi")
        if needs_b and self.barnes is None:
            raise ValueError(f"family {self.family} requires Barnes parameters")
        if needs_b and self.barnes.r != self.r:
            raise ValueError("Barnes parameter length must equal r")

    def evaluate(self, q, x, method: Optional[str] = None,
                 cfg: Optional[SeriesConfig] = None):
        cfg = DEFAULT_CONFIG if cfg is None else cfg
        fam = self.family
        if fam == "basic":
            return euler_poly(self.n, q, x)
        if fam == "order-r":
            return euler_poly_order(self.n, self.r, q, x,
                                    method or "closed", cfg)
        if fam == "hr":
            return euler_poly_hr(self.n, self.h, self.r, q, x,
                                 method or "closed", cfg)
        if fam == "chi":
            return euler_chi(self.n, self.chi, q, x, method or "series", cfg)
        if fam == "chi-order-r":
            return euler_chi_order(self.n, self.r, self.chi, q, x, cfg,
                                   method=method or "series")
        if fam == "chi-hr":
            return euler_chi_hr(self.n, self.h, self.r, self.chi, q, x,
                                method or "series", cfg)
        if fam == "barnes":
            return barnes_euler(self.n, self.barnes, q, x,
                                method or "closed", cfg)
        return barnes_euler_chi(self.n, self.chi, self.barnes, q, x, cfg)


# ---------------------------------------------------------------------------
# shared pieces

def _check_n(n: int) -> int:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree n must be a nonnegative integer, got {n!r}")
    return n


def _check_r(r: int) -> int:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order r must be a positive integer, got {r!r}")
    return r


def _method(value: str, allowed: tuple) -> str:
    m = str(value).strip().lower()
    if m not in allowed:
        raise ValueError(f"method must be one of {allowed}, got {value!r}")
    return m


def _closed_sum(n: int, qv: Number, qx: Number, factor) -> Number:
    """(1-q)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l q^{lx} factor(l)."""
    total = None
    qlx = ONE
    for l in range(n + 1):
        c = Number.exact(-math.comb(n, l) if l % 2 else math.comb(n, l))
        term = c * qlx * factor(l)
        total = term if total is None else total + term
        qlx = qlx * qx
    return total / pow_principal(1 - qv, n)


def _wrap(value: Number, bound: float, with_tail: bool):
    return SeriesValue(value, bound) if with_tail else value


def _poly_tail_prefactor(qc: complex, xc: complex, n: int, r: int) -> float:
    qx_mod = abs(qc ** xc)
    K, _ = srs.bracket_range(qc, qx_mod, 0.0)
    return abs(1.0 + qc) ** r * K ** n


# ---------------------------------------------------------------------------
# basic family

def euler_poly(n: int, q, x: NumberLike = ZERO) -> Number:
    """Degree-n basic q-Euler polynomial at x.

    Evaluated by the finite alternating sum
    [2]_q/(1-q)^n sum_l C(n,l)(-1)^l q^{lx}/(1+q^{l+1}); exact operands
    give an exact rational result (x must then be an integer, or a rational
    for which q^x has an exact value).
    """
    _check_n(n)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    qx = srs.qpow_number(qv, x)

    def factor(l):
        return ONE / (ONE + pow_principal(qv, l + 1))

    return q_bracket_two(qv) * _closed_sum(n, qv, qx, factor)


# ---------------------------------------------------------------------------
# order r

def euler_poly_order(n: int, r: int, q, x: NumberLike = ZERO,
                     method: str = "closed",
                     cfg: SeriesConfig = DEFAULT_CONFIG, *,
                     with_tail: bool = False):
    """Order-r q-Euler polynomial.

    "closed": [2]_q^r/(1-q)^n sum_l C(n,l)(-1)^l q^{lx}/(1+q^{l+1})^r.
    "series": [2]_q^r sum_m binom(m+r-1,m)(-q)^m [m+x]_q^n, truncated at
    cfg.max_terms with a certified geometric tail bound.
    """
    _check_n(n)
    _check_r(r)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    method = _method(method, ("closed", "series"))

    if method == "closed":
        qx = srs.qpow_number(qv, x)

        def factor(l):
            return ONE / pow_principal(ONE + pow_principal(qv, l + 1), r)

        two_r = pow_principal(q_bracket_two(qv), r)
        return _wrap(two_r * _closed_sum(n, qv, qx, factor), 0.0, with_tail)

    M = cfg.max_terms
    qc = q.to_complex()
    bound = srs.geometric_tail(abs(qc), r, M,
                               _poly_tail_prefactor(qc, complex(x), n, r))
    srs.enforce_bound(bound, cfg)
    if srs.lane_for(q, x) == "c128":
        coeffs = srs.ordinary_binomial_c128(r, M) * srs.geometric_c128(-qc, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), n, zeta=False)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        coeffs = srs.elementwise(srs.ordinary_binomial_generic(r, M),
                                 srs.geometric_generic(-qv, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, n, zeta=False)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


# ---------------------------------------------------------------------------
# (h, r) extension

def _hr_guard(h: int, r: int) -> None:
    if h - r + 1 < 1:
        raise DivergenceError(
            f"divergence guard: series form requires h-r+1 >= 1, "
            f"got h={h}, r={r}")


def euler_poly_hr(n: int, h: int, r: int, q, x: NumberLike = ZERO,
                  method: str = "closed",
                  cfg: SeriesConfig = DEFAULT_CONFIG, *,
                  with_tail: bool = False):
    """(h, r) q-Euler polynomial.

    The closed form divides by the q-Pochhammer (-q^{h-r+l+1} : q)_r and is
    defined for any integer h; the series form carries q-binomial weights
    with ratio q^{h-r+1} per step and so requires h-r+1 >= 1.
    """
    _check_n(n)
    _check_r(r)
    if not isinstance(h, int):
        raise ValueError("h must be an integer")
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    method = _method(method, ("closed", "series"))

    if method == "closed":
        qx = srs.qpow_number(qv, x)

        def factor(l):
            base = -pow_principal(qv, h - r + l + 1)
            return ONE / q_pochhammer(base, q, r)

        two_r = pow_principal(q_bracket_two(qv), r)
        return _wrap(two_r * _closed_sum(n, qv, qx, factor), 0.0, with_tail)

    _hr_guard(h, r)
    M = cfg.max_terms
    qc = q.to_complex()
    qm = abs(qc)
    rho = qm ** (h - r + 1)
    # |binom(m+r-1,m)_q| <= prod_{i<r} (1+|q|^i)/|1-q^i|, uniform in m
    dr = 1.0
    for i in range(1, r):
        dr *= (1.0 + qm ** i) / abs(1.0 - qc ** i)
    pref = _poly_tail_prefactor(qc, complex(x), n, r) * dr
    bound = pref * rho ** (M + 1) / (1.0 - rho)
    srs.enforce_bound(bound, cfg)

    if srs.lane_for(q, x) == "c128":
        base = -qc ** (h - r + 1)
        coeffs = srs.qbinom_c128(qc, r, M) * srs.geometric_c128(base, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), n, zeta=False)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        base = -pow_principal(qv, h - r + 1)
        coeffs = srs.elementwise(srs.qbinom_generic(q, r, M),
                                 srs.geometric_generic(base, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, n, zeta=False)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


# ---------------------------------------------------------------------------
# character-twisted families

def _residue_factor(qv: Number, chi: DirichletCharacter, e: int) -> Number:
    """sum_{a=0}^{f-1} chi(a) (-1)^a q^{ea} / (1 + q^{ef}): the residue-class
    collapse of sum_m chi(m)(-1)^m q^{em} for odd conductor f."""
    f = chi.conductor
    qe = pow_principal(qv, e)
    num = None
    p = ONE
    for a in range(f):
        ca = chi(a)
        if not ca.is_zero():
            t = ca * p if a % 2 == 0 else -(ca * p)
            num = t if num is None else num + t
        p = p * qe
    den = ONE + pow_principal(qe, f)
    return (num / den) if num is not None else ZERO


def _chi_closed_guard(h: int, r: int) -> None:
    # residue collapse sums a geometric series per coordinate; needs the
    # same convergence exponent as the series form
    if h - r + 1 < 1:
        raise DivergenceError(
            f"divergence guard: residue closed form requires h-r+1 >= 1, "
            f"got h={h}, r={r}")


def euler_chi(n: int, chi: DirichletCharacter, q, x: NumberLike = ZERO,
              method: str = "series", cfg: SeriesConfig = DEFAULT_CONFIG, *,
              with_tail: bool = False):
    """Generalized q-Euler polynomial attached to a character chi.

    "series" sums [2]_q sum_m (-q)^m chi(m) [m+x]_q^n truncated;
    "distribution" uses the f-term rewrite over residue classes, delegating
    to the basic family at modulus q^f (finite, exact-capable);
    "closed" collapses the series over residue classes into a finite
    alternating sum (an extension beyond the two textbook methods).
    """
    _check_n(n)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    method = _method(method, ("series", "distribution", "closed"))

    if method == "distribution":
        return _wrap(_chi_distribution_hr(n, 1, 1, chi, q, x, cfg), 0.0,
                     with_tail)
    if method == "closed":
        qx = srs.qpow_number(qv, x)
        value = q_bracket_two(qv) * _closed_sum(
            n, qv, qx, lambda l: _residue_factor(qv, chi, l + 1))
        return _wrap(value, 0.0, with_tail)

    M = cfg.max_terms
    qc = q.to_complex()
    bound = srs.geometric_tail(abs(qc), 1, M,
                               _poly_tail_prefactor(qc, complex(x), n, 1))
    srs.enforce_bound(bound, cfg)
    if srs.lane_for(q, x) == "c128":
        coeffs = srs.chi_c128(chi, M) * srs.geometric_c128(-qc, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), n, zeta=False)
        value = Number.of((1.0 + qc) * core)
    else:
        conv = character_convolution(chi, [None], M)
        coeffs = srs.elementwise(conv, srs.geometric_generic(-qv, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, n, zeta=False)
        value = q_bracket_two(qv) * core
    return _wrap(value, bound, with_tail)


def euler_chi_order(n: int, r: int, chi: DirichletCharacter, q,
                    x: NumberLike = ZERO, cfg: SeriesConfig = DEFAULT_CONFIG,
                    *, method: str = "series", with_tail: bool = False):
    """Order-r generalized q-Euler polynomial attached to chi.

    The r-fold character sum collapses to a single index: the weight
    c[m] = (chi * ... * chi)[m] (r-fold Cauchy convolution) since the
    (-q)^{m_1+...+m_r} factor depends only on the total.  "closed" is the
    residue-collapse extension (each coordinate summed as a finite
    geometric aggregate).
    """
    _check_n(n)
    _check_r(r)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    method = _method(method, ("series", "closed"))

    if method == "closed":
        qx = srs.qpow_number(qv, x)

        def factor(l):
            return pow_principal(_residue_factor(qv, chi, l + 1), r)

        two_r = pow_principal(q_bracket_two(qv), r)
        return _wrap(two_r * _closed_sum(n, qv, qx, factor), 0.0, with_tail)

    M = cfg.max_terms
    qc = q.to_complex()
    bound = srs.geometric_tail(abs(qc), r, M,
                               _poly_tail_prefactor(qc, complex(x), n, r))
    srs.enforce_bound(bound, cfg)
    if srs.lane_for(q, x) == "c128":
        tile = srs.chi_c128(chi, M)
        conv = srs.convolve_c128([tile] * r, M)
        coeffs = conv * srs.geometric_c128(-qc, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), n, zeta=False)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        conv = character_convolution(chi, [None] * r, M)
        coeffs = srs.elementwise(conv, srs.geometric_generic(-qv, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, n, zeta=False)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def euler_chi_hr(n: int, h: int, r: int, chi: DirichletCharacter, q,
                 x: NumberLike = ZERO, method: str = "series",
                 cfg: SeriesConfig = DEFAULT_CONFIG, *,
                 with_tail: bool = False):
    """Extended r-ple generalized q-Euler polynomial (the (h,r) chi family).

    "series": per-coordinate weights (-1)^m q^{(h-j+1)m} chi(m) collapsed by
    convolution; requires h-r+1 >= 1.  "distribution": the f^r-term rewrite
    over residue vectors mod f whose zeta factor at negative integer
    argument is a finite (h,r) polynomial value at modulus q^f.  "closed":
    residue-collapse extension, finite alternating sum over l with one
    geometric aggregate per coordinate.
    """
    _check_n(n)
    _check_r(r)
    if not isinstance(h, int):
        raise ValueError("h must be an integer")
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    method = _method(method, ("series", "distribution", "closed"))

    if method == "distribution":
        return _wrap(_chi_distribution_hr(n, h, r, chi, q, x, cfg), 0.0,
                     with_tail)
    if method == "closed":
        _chi_closed_guard(h, r)
        qx = srs.qpow_number(qv, x)

        def factor(l):
            out = ONE
            for j in range(1, r + 1):
                out = out * _residue_factor(qv, chi, h - j + 1 + l)
            return out

        two_r = pow_principal(q_bracket_two(qv), r)
        return _wrap(two_r * _closed_sum(n, qv, qx, factor), 0.0, with_tail)

    _hr_guard(h, r)
    M = cfg.max_terms
    qc = q.to_complex()
    rho = abs(qc) ** (h - r + 1)
    bound = srs.geometric_tail(rho, r, M,
                               _poly_tail_prefactor(qc, complex(x), n, r))
    srs.enforce_bound(bound, cfg)
    if srs.lane_for(q, x) == "c128":
        tile = srs.chi_c128(chi, M)
        rows = [tile * srs.geometric_c128(-qc ** (h - j + 1), M)
                for j in range(1, r + 1)]
        conv = srs.convolve_c128(rows, M)
        core = srs.sum_collapsed_c128(conv, qc, complex(x), n, zeta=False)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        descs = []
        for j in range(1, r + 1):
            base = -pow_principal(qv, h - j + 1)
            descs.append(_geometric_descriptor(base))
        conv = character_convolution(chi, descs, M)
        core = srs.sum_collapsed_generic(conv, qv, x, n, zeta=False)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def _geometric_descriptor(base: Number):
    def w(m: int) -> Number:
        return pow_principal(base, m) if m else ONE
    return w


def _chi_distribution_hr(n: int, h: int, r: int, chi: DirichletCharacter,
                         q: QParam, x: Number, cfg: SeriesConfig) -> Number:
    """Finite rewrite over residue vectors a in [0,f)^r:

    ([2]_q/[2]_{q^f})^r [f]_q^n sum_a prod_j chi(a_j)(-1)^{a_j} q^{(h-j+1)a_j}
    times the (h,r) polynomial at modulus q^f and argument (x+sum a_j)/f.

    The h=r=1 case is the classical distribution relation for the chi
    family.  The [f]_q^n factor is forced by homogeneity of [m+x]_q^n under
    m+x = f*((x+sum a)/f + f-multiples); dropping it breaks every n >= 1
    cross-check against the series form.
    """
    f = chi.conductor
    qv = q.value
    qf = pow_principal(qv, f)
    qfp = QParam.of(qf)
    ratio = q_bracket_two(qv) / q_bracket_two(qf)
    pref = pow_principal(ratio, r)
    fqn = pow_principal(q_number(f, q), n)

    # per-coordinate power ladders q^{(h-j+1)a}, a = 0..f-1
    ladders = []
    for j in range(1, r + 1):
        base = pow_principal(qv, h - j + 1)
        ladders.append(srs.geometric_generic(base, f - 1))

    total = None
    for avec in itertools.product(range(f), repeat=r):
        w = None
        for j, a in enumerate(avec):
            ca = chi(a)
            if ca.is_zero():
                w = None
                break
            t = ca * ladders[j][a]
            if a % 2:
                t = -t
            w = t if w is None else w * t
        if w is None:
            continue
        arg = (x + sum(avec)) / f
        inner = euler_poly_hr(n, h, r, qfp, arg, "closed", cfg)
        term = w * inner
        total = term if total is None else total + term
    if total is None:
        return ZERO
    return pref * fqn * total


# ---------------------------------------------------------------------------
# Barnes-type families

def barnes_euler(n: int, params: BarnesParams, q, x: NumberLike = ZERO,
                 method: str = "closed", cfg: SeriesConfig = DEFAULT_CONFIG,
                 *, with_tail: bool = False):
    """Barnes-type multiple q-Euler polynomial with parameters (a; b).

    "closed": finite l-sum with denominator prod_j (1+q^{l a_j + b_j + 1}).
    "series": full r-fold lattice sum of (-1)^{|m|} q^{sum (b_j+1) m_j}
    [sum a_j m_j + x]_q^n over [0, M]^r, subject to the total-term cap.
    """
    _check_n(n)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    r = params.r
    method = _method(method, ("closed", "series"))

    if method == "closed":
        qx = srs.qpow_number(qv, x)

        def factor(l):
            den = ONE
            for aj, bj in zip(params.a, params.b):
                e = Number.of(l) * aj + Number.of(bj + 1)
                den = den * (ONE + srs.qpow_number(qv, e))
            return ONE / den

        two_r = pow_principal(q_bracket_two(qv), r)
        return _wrap(two_r * _closed_sum(n, qv, qx, factor), 0.0, with_tail)

    params.require_series_weights()
    M = cfg.max_terms
    qc = q.to_complex()
    _barnes_decay_guard(qc, params)
    rhos = [abs(qc) ** (bj + 1) for bj in params.b]
    bound = srs.lattice_tail(rhos, M, _poly_tail_prefactor(qc, complex(x), n, r))
    srs.enforce_bound(bound, cfg)

    if srs.lane_for(q, x, *params.a) == "c128":
        U = np.vstack([srs.geometric_c128(-qc ** (bj + 1), M)
                       for bj in params.b])
        qa = [qc ** complex(aj) for aj in params.a]
        core = srs.sum_barnes_c128(U, qa, qc, complex(x), n, zeta=False,
                                   cap=cfg.term_cap)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        Ujs = [srs.geometric_generic(-pow_principal(qv, bj + 1), M)
               for bj in params.b]
        core = srs.sum_barnes_generic(Ujs, params.a, qv, x, n, zeta=False,
                                      cap=cfg.term_cap)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def barnes_euler_chi(n: int, chi: DirichletCharacter, params: BarnesParams,
                     q, x: NumberLike = ZERO,
                     cfg: SeriesConfig = DEFAULT_CONFIG, *,
                     with_tail: bool = False):
    """Generalized Barnes-type multiple q-Euler polynomial attached to chi.

    Series only: the character rides along each coordinate of the lattice
    sum and distinct a_j admit no collapse to a single index.
    """
    _check_n(n)
    q = QParam.of(q)
    x = Number.of(x)
    qv = q.value
    r = params.r
    params.require_series_weights()
    M = cfg.max_terms
    qc = q.to_complex()
    _barnes_decay_guard(qc, params)
    rhos = [abs(qc) ** (bj + 1) for bj in params.b]
    bound = srs.lattice_tail(rhos, M, _poly_tail_prefactor(qc, complex(x), n, r))
    srs.enforce_bound(bound, cfg)

    if srs.lane_for(q, x, *params.a) == "c128":
        tile = srs.chi_c128(chi, M)
        U = np.vstack([tile * srs.geometric_c128(-qc ** (bj + 1), M)
                       for bj in params.b])
        qa = [qc ** complex(aj) for aj in params.a]
        core = srs.sum_barnes_c128(U, qa, qc, complex(x), n, zeta=False,
                                   cap=cfg.term_cap)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        Ujs = []
        for bj in params.b:
            base = -pow_principal(qv, bj + 1)
            geo = srs.geometric_generic(base, M)
            Ujs.append([chi(m) * geo[m] for m in range(M + 1)])
        core = srs.sum_barnes_generic(Ujs, params.a, qv, x, n, zeta=False,
                                      cap=cfg.term_cap)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def _barnes_decay_guard(qc: complex, params: BarnesParams) -> None:
    # tail certification needs |q^{a_j}| <= 1 so the bracket stays bounded
    for aj in params.a:
        if abs(qc ** complex(aj)) > 1.0 + 1e-15:
            raise DivergenceError(
                f"cannot certify convergence: |q^a_j| > 1 for a_j = {aj!r}")
