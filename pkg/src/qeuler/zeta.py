"""Interpolating q-zeta and q-l functions.

Each polynomial family has a companion function of a complex variable s
obtained by putting [.]^{-s} where the polynomial series has [.]^n.  For
|q| < 1 every one of these series converges absolutely for all complex s
(the geometric weights dominate), so evaluation is truncation plus a
certified tail bound; there is no pole hunting to do.

At s = -n (n a nonnegative integer) the plain and (h,r) zeta functions are
evaluated through the finite closed forms of the matching polynomial
family rather than the series: that value is exact-capable and is what the
interpolation theorems assert.  Pass method="series" to force the
truncated series instead, e.g. to check the interpolation independently.

Powers use the principal branch: z^{-s} = exp(-s Log z) with Log the
principal logarithm.  For real q in (0,1) and x > 0 all brackets are
positive, so no branch seam is crossed in the default domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import series as srs
from .characters import DirichletCharacter, character_convolution
from .eulerpoly import (BarnesParams, _chi_closed_guard, _check_r,
                        _geometric_descriptor, _hr_guard, euler_poly_order,
                        euler_poly_hr)
from .qcore import q_bracket_two, q_number
from .scalar import (ExactModeError, Number, NumberLike, ONE, QParam, ZERO,
                     pow_principal)
from .series import (DEFAULT_CONFIG, DivergenceError, SeriesConfig,
                     SeriesValue)

__all__ = [
    "ZetaQuery", "zeta_multi", "zeta_multi_h", "l_multi", "l_multi_h",
    "barnes_zeta", "barnes_l",
]

_ZFAMILIES = ("zeta", "zeta-h", "l", "l-h", "barnes-zeta", "barnes-l")


@dataclass(frozen=True)
class ZetaQuery:
    """One zeta/l evaluation request: the variable s, the argument x, and
    the family tag with its indices."""

    family: str
    s: Number
    x: Number
    r: int = 1
    h: Optional[int] = None
    chi: Optional[DirichletCharacter] = None
    barnes: Optional[BarnesParams] = None

    def __post_init__(self):
        if self.family not in _ZFAMILIES:
            raise ValueError(f"unknown zeta family {self.family!r}")
        object.__setattr__(self, "s", Number.of(self.s))
        object.__setattr__(self, "x", Number.of(self.x))
        _check_zeta_x(self.x)
        if self.family in ("zeta-h", "l-h") and self.h is None:
            raise ValueError(f"family {self.family} requires h")
        if self.family in ("l", "l-h", "barnes-l") and self.chi is None:
            raise ValueError(f"family {self.family} requires a character")
        if self.family in ("barnes-zeta", "barnes-l") and self.barnes is None:
            raise ValueError(f"family {self.family} requires Barnes parameters")

    def evaluate(self, q, cfg: Optional[SeriesConfig] = None,
                 method: Optional[str] = None, with_tail: bool = False):
        cfg = DEFAULT_CONFIG if cfg is None else cfg
        fam = self.family
        if fam == "zeta":
            return zeta_multi(self.s, self.r, q, self.x, cfg,
                              method=method or "auto", with_tail=with_tail)
        if fam == "zeta-h":
            return zeta_multi_h(self.s, self.h, self.r, q, self.x, cfg,
                                method=method or "auto", with_tail=with_tail)
        if fam == "l":
            return l_multi(self.s, self.chi, self.r, q, self.x, cfg,
                           with_tail=with_tail)
        if fam == "l-h":
            return l_multi_h(self.s, self.chi, self.h, self.r, q, self.x, cfg,
                             method=method or "direct", with_tail=with_tail)
        if fam == "barnes-zeta":
            return barnes_zeta(self.s, self.barnes, q, self.x, cfg,
                               with_tail=with_tail)
        return barnes_l(self.s, self.chi, self.barnes, q, self.x, cfg,
                        with_tail=with_tail)


# ---------------------------------------------------------------------------
# argument checks

def _check_zeta_x(x: Number) -> None:
    """Reject x in {0, -1, -2, ...}: the m = -x term has a vanishing bracket."""
    if x.is_exact:
        f = x.fraction
        if f.denominator == 1 and f <= 0:
            raise ValueError(f"x = {f} lies in the excluded set 0, -1, -2, ...")
    else:
        z = x.to_complex()
        if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
            raise ValueError(
                f"x = {z.real} lies in the excluded set 0, -1, -2, ...")


def _nonpos_int(s: Number) -> Optional[int]:
    """n >= 0 such that s = -n, when s is an integral real <= 0."""
    if s.is_exact:
        f = s.fraction
        if f.denominator == 1 and f <= 0:
            return -int(f)
        return None
    z = s.to_complex()
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        return -int(z.real)
    return None


def _require_series_lane(q: QParam, x: Number, s: Number) -> str:
    lane = srs.lane_for(q, x, s)
    if lane == "exact" and not s.is_integer():
        raise ExactModeError(
            "exact-mode series need an integer s; use float mode")
    return lane


def _wrap(value, bound, with_tail):
    return SeriesValue(value, bound) if with_tail else value


# ---------------------------------------------------------------------------
# tail bounds for [.]^{-s} series

def _collapsed_zeta_tail(qc: complex, xc: complex, sc: complex, rho: float,
                         r: int, M: int, extra: float = 1.0) -> float:
    qx_mod = abs(qc ** xc)
    K, L = srs.bracket_range(qc, qx_mod, abs(qc) ** (M + 1))
    pb = srs.power_bound(K, L, sc, zeta=True)
    return srs.geometric_tail(rho, r, M, abs(1.0 + qc) ** r * extra * pb)


def _hr_zeta_tail(qc: complex, xc: complex, sc: complex, h: int, r: int,
                  M: int) -> float:
    qm = abs(qc)
    rho = qm ** (h - r + 1)
    dr = 1.0
    for i in range(1, r):
        dr *= (1.0 + qm ** i) / abs(1.0 - qc ** i)
    qx_mod = abs(qc ** xc)
    K, L = srs.bracket_range(qc, qx_mod, qm ** (M + 1))
    pb = srs.power_bound(K, L, sc, zeta=True)
    if not 0.0 <= rho < 1.0:
        raise DivergenceError(f"series ratio {rho} is not inside [0,1)")
    return abs(1.0 + qc) ** r * dr * pb * rho ** (M + 1) / (1.0 - rho)


# ---------------------------------------------------------------------------
# plain and (h, r) zeta

def zeta_multi(s: NumberLike, r: int, q, x: NumberLike,
               cfg: SeriesConfig = DEFAULT_CONFIG, *, method: str = "auto",
               with_tail: bool = False):
    """Multiple q-zeta: [2]_q^r sum_m binom(m+r-1,m)(-q)^m [m+x]_q^{-s}."""
    _check_r(r)
    q = QParam.of(q)
    s = Number.of(s)
    x = Number.of(x)
    _check_zeta_x(x)
    if method not in ("auto", "series"):
        raise ValueError(f"method must be 'auto' or 'series', got {method!r}")

    n = _nonpos_int(s)
    if method == "auto" and n is not None:
        return _wrap(euler_poly_order(n, r, q, x, "closed", cfg), 0.0,
                     with_tail)

    lane = _require_series_lane(q, x, s)
    M = cfg.max_terms
    qc = q.to_complex()
    bound = _collapsed_zeta_tail(qc, complex(x), complex(s), abs(qc), r, M)
    srs.enforce_bound(bound, cfg)
    if lane == "c128":
        coeffs = srs.ordinary_binomial_c128(r, M) * srs.geometric_c128(-qc, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), complex(s),
                                      zeta=True)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        qv = q.value
        coeffs = srs.elementwise(srs.ordinary_binomial_generic(r, M),
                                 srs.geometric_generic(-qv, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, s, zeta=True)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def zeta_multi_h(s: NumberLike, h: int, r: int, q, x: NumberLike,
                 cfg: SeriesConfig = DEFAULT_CONFIG, *, method: str = "auto",
                 with_tail: bool = False):
    """(h, q)-zeta: q-binomial weights (-q^{h-r+1})^m; needs h-r+1 >= 1."""
    _check_r(r)
    if not isinstance(h, int):
        raise ValueError("h must be an integer")
    _hr_guard(h, r)
    q = QParam.of(q)
    s = Number.of(s)
    x = Number.of(x)
    _check_zeta_x(x)
    if method not in ("auto", "series"):
        raise ValueError(f"method must be 'auto' or 'series', got {method!r}")

    n = _nonpos_int(s)
    if method == "auto" and n is not None:
        return _wrap(euler_poly_hr(n, h, r, q, x, "closed", cfg), 0.0,
                     with_tail)

    lane = _require_series_lane(q, x, s)
    M = cfg.max_terms
    qc = q.to_complex()
    bound = _hr_zeta_tail(qc, complex(x), complex(s), h, r, M)
    srs.enforce_bound(bound, cfg)
    if lane == "c128":
        base = -qc ** (h - r + 1)
        coeffs = srs.qbinom_c128(qc, r, M) * srs.geometric_c128(base, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), complex(s),
                                      zeta=True)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        qv = q.value
        base = -pow_principal(qv, h - r + 1)
        coeffs = srs.elementwise(srs.qbinom_generic(q, r, M),
                                 srs.geometric_generic(base, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, s, zeta=True)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


# ---------------------------------------------------------------------------
# Dirichlet l-functions

def l_multi(s: NumberLike, chi: DirichletCharacter, r: int, q, x: NumberLike,
            cfg: SeriesConfig = DEFAULT_CONFIG, *, with_tail: bool = False):
    """Dirichlet-type multiple q-l function.

    Collapsed to one index: weight c[m](-q)^m with c the r-fold character
    convolution, then the truncated [.]^{-s} sum.  Always a series; the
    interpolation to the chi polynomial family at s = -n is a theorem about
    this series, not a shortcut taken by the implementation.
    """
    _check_r(r)
    q = QParam.of(q)
    s = Number.of(s)
    x = Number.of(x)
    _check_zeta_x(x)
    lane = _require_series_lane(q, x, s)
    M = cfg.max_terms
    qc = q.to_complex()
    bound = _collapsed_zeta_tail(qc, complex(x), complex(s), abs(qc), r, M)
    srs.enforce_bound(bound, cfg)
    if lane == "c128":
        tile = srs.chi_c128(chi, M)
        conv = srs.convolve_c128([tile] * r, M)
        coeffs = conv * srs.geometric_c128(-qc, M)
        core = srs.sum_collapsed_c128(coeffs, qc, complex(x), complex(s),
                                      zeta=True)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        qv = q.value
        conv = character_convolution(chi, [None] * r, M)
        coeffs = srs.elementwise(conv, srs.geometric_generic(-qv, M))
        core = srs.sum_collapsed_generic(coeffs, qv, x, s, zeta=True)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def l_multi_h(s: NumberLike, chi: DirichletCharacter, h: int, r: int, q,
              x: NumberLike, cfg: SeriesConfig = DEFAULT_CONFIG, *,
              method: str = "direct", with_tail: bool = False):
    """Dirichlet-type multiple (h, q)-l function.

    "direct" collapses per-coordinate weights (-1)^m q^{(h-j+1)m} chi(m) by
    convolution and sums once.  "factored" rewrites over residue vectors
    mod f and delegates to the (h, q)-zeta at modulus q^f:

        ([2]_q/[2]_{q^f})^r [f]_q^{-s}
            sum_a prod_j chi(a_j)(-1)^{a_j} q^{(h-j+1)a_j}
                zeta_h(s, (x + sum a_j)/f  at q^f).

    The two paths re-order the same absolutely convergent double series and
    agree to within their tail bounds.
    """
    _check_r(r)
    if not isinstance(h, int):
        raise ValueError("h must be an integer")
    _hr_guard(h, r)
    q = QParam.of(q)
    s = Number.of(s)
    x = Number.of(x)
    _check_zeta_x(x)
    if method not in ("direct", "factored"):
        raise ValueError(f"method must be 'direct' or 'factored', got {method!r}")

    if method == "factored":
        return _l_multi_h_factored(s, chi, h, r, q, x, cfg, with_tail)

    lane = _require_series_lane(q, x, s)
    M = cfg.max_terms
    qc = q.to_complex()
    rho = abs(qc) ** (h - r + 1)
    bound = _collapsed_zeta_tail(qc, complex(x), complex(s), rho, r, M)
    srs.enforce_bound(bound, cfg)
    if lane == "c128":
        tile = srs.chi_c128(chi, M)
        rows = [tile * srs.geometric_c128(-qc ** (h - j + 1), M)
                for j in range(1, r + 1)]
        conv = srs.convolve_c128(rows, M)
        core = srs.sum_collapsed_c128(conv, qc, complex(x), complex(s),
                                      zeta=True)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        qv = q.value
        descs = []
        for j in range(1, r + 1):
            base = -pow_principal(qv, h - j + 1)
            descs.append(_geometric_descriptor(base))
        conv = character_convolution(chi, descs, M)
        core = srs.sum_collapsed_generic(conv, qv, x, s, zeta=True)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)


def _l_multi_h_factored(s, chi, h, r, q, x, cfg, with_tail):
    f = chi.conductor
    qv = q.value
    qf = pow_principal(qv, f)
    qfp = QParam.of(qf)
    pref = pow_principal(q_bracket_two(qv) / q_bracket_two(qf), r)
    fq_ms = pow_principal(q_number(f, q), -s)

    ladders = []
    for j in range(1, r + 1):
        base = pow_principal(qv, h - j + 1)
        ladders.append(srs.geometric_generic(base, f - 1))

    total = None
    worst = 0.0
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
        inner = zeta_multi_h(s, h, r, qfp, arg, cfg, with_tail=True)
        worst = max(worst, inner.tail_bound)
        term = w * inner.value
        total = term if total is None else total + term
    value = ZERO if total is None else pref * fq_ms * total
    # every residue vector contributes at most |weight| <= 1 times its own
    # tail; f^r of them, scaled by the finite prefactor
    scale = abs(complex(pref)) * abs(complex(fq_ms))
    bound = worst * (f ** r) * scale
    return _wrap(value, bound, with_tail)


# ---------------------------------------------------------------------------
# Barnes-type zeta and l

def barnes_zeta(s: NumberLike, params: BarnesParams, q, x: NumberLike,
                cfg: SeriesConfig = DEFAULT_CONFIG, *,
                with_tail: bool = False):
    """Barnes-type multiple q-zeta: the r-fold lattice sum of
    (-1)^{|m|} q^{sum (b_j+1) m_j} [sum a_j m_j + x]_q^{-s}."""
    return _barnes_series(s, None, params, q, x, cfg, with_tail)


def barnes_l(s: NumberLike, chi: DirichletCharacter, params: BarnesParams,
             q, x: NumberLike, cfg: SeriesConfig = DEFAULT_CONFIG, *,
             with_tail: bool = False):
    """Barnes-type multiple q-l: as barnes_zeta with prod chi(m_j) inserted."""
    return _barnes_series(s, chi, params, q, x, cfg, with_tail)


def _barnes_series(s, chi, params, q, x, cfg, with_tail):
    q = QParam.of(q)
    s = Number.of(s)
    x = Number.of(x)
    _check_zeta_x(x)
    r = params.r
    params.require_series_weights()
    lane = _require_series_lane(q, x, s)
    M = cfg.max_terms
    qc = q.to_complex()

    gammas = [abs(qc ** complex(aj)) for aj in params.a]
    for aj, g in zip(params.a, gammas):
        if g > 1.0 + 1e-15:
            raise DivergenceError(
                f"cannot certify convergence: |q^a_j| > 1 for a_j = {aj!r}")
    rhos = [abs(qc) ** (bj + 1) for bj in params.b]
    qx_mod = abs(qc ** complex(x))
    K, L = srs.bracket_range(qc, qx_mod, max(gammas) ** (M + 1))
    pb = srs.power_bound(K, L, complex(s), zeta=True)
    bound = srs.lattice_tail(rhos, M, abs(1.0 + qc) ** r * pb)
    srs.enforce_bound(bound, cfg)

    if lane == "c128":
        tile = srs.chi_c128(chi, M) if chi is not None else None
        rows = []
        for bj in params.b:
            row = srs.geometric_c128(-qc ** (bj + 1), M)
            rows.append(row * tile if tile is not None else row)
        U = np.vstack(rows)
        qa = [qc ** complex(aj) for aj in params.a]
        core = srs.sum_barnes_c128(U, qa, qc, complex(x), complex(s),
                                   zeta=True, cap=cfg.term_cap)
        value = Number.of((1.0 + qc) ** r * core)
    else:
        qv = q.value
        Ujs = []
        for bj in params.b:
            base = -pow_principal(qv, bj + 1)
            geo = srs.geometric_generic(base, M)
            if chi is not None:
                geo = [chi(m) * geo[m] for m in range(M + 1)]
            Ujs.append(geo)
        core = srs.sum_barnes_generic(Ujs, params.a, qv, x, s, zeta=True,
                                      cap=cfg.term_cap)
        value = pow_principal(q_bracket_two(qv), r) * core
    return _wrap(value, bound, with_tail)
