"""Truncated-series machinery shared by the polynomial and zeta families.

Every infinite sum in the package is a weighted series in a single collapsed
index m (weight times [m+x]_q^{+-}) or an r-fold lattice sum over
(m_1..m_r).  This module owns the truncation policy, the certified geometric
tail bounds, the per-family weight builders, and the dispatch between three
evaluation lanes:

  exact  - arbitrary-precision rationals (integer exponents only),
  c128   - double-precision complex through the numba/numpy kernel backend,
  mp     - mpmath scalars for precisions above 53 bits.

The tail bounds rest on two facts: |binom(m+r-1,m)| <= (m+r-1)^{r-1}/(r-1)!
and sum_{m>M} binom(m+r-1,m) rho^m <= rho^{M+1} (M+1+r)^{r-1} / (1-rho)^r,
and on uniform bracket bounds (1-|q^x|d)/|1-q| <= |[y]_q| <= (1+|q^x|)/|1-q|
over the summation region.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .backends import get_backend
from .characters import DirichletCharacter
from .qcore import q_binomial_table
from .scalar import (DOUBLE_PREC, Number, ONE, QParam, ZERO, exact_root_pow,
                     pow_principal)


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy: depth per (collapsed or per-coordinate) index,
    comparison tolerance, whether to raise when the certified tail exceeds
    the tolerance, and the total-term cap for r-fold lattice sums."""

    max_terms: int = 400
    tolerance: float = 1e-10
    enforce_tail_bound: bool = True
    term_cap: int = 10_000_000

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.tolerance >= 0:
            raise ValueError("tolerance must be >= 0")
        if self.term_cap < 1:
            raise ValueError("term_cap must be >= 1")


DEFAULT_CONFIG = SeriesConfig()


class SeriesValue(NamedTuple):
    """A series evaluation together with its certified truncation error."""

    value: Number
    tail_bound: float


class DivergenceError(ValueError):
    """The requested series representation does not converge."""


class TermCapError(ValueError):
    """An r-fold sum would exceed the configured total-term cap."""


class TailBoundError(ArithmeticError):
    """The certified tail bound exceeds the configured tolerance."""


# ---------------------------------------------------------------------------
# lanes

def lane_for(q: QParam, *others: Optional[Number]) -> str:
    precs = []
    if not q.is_exact:
        precs.append(q.value.precision)
    for o in others:
        if o is not None and not o.is_exact:
            precs.append(o.precision)
    if not precs:
        return "exact"
    return "c128" if max(precs) <= DOUBLE_PREC else "mp"


def qpow_number(q: Number, e: Number) -> Number:
    """q^e staying exact when possible (extracting exact roots for rational
    exponents), principal-branch float otherwise."""
    if q.is_exact and e.is_exact:
        return Number(exact_root_pow(q.fraction, e.fraction))
    return pow_principal(q, e)


# ---------------------------------------------------------------------------
# weight builders, c128 lane

def geometric_c128(base: complex, M: int) -> np.ndarray:
    return np.power(base, np.arange(M + 1, dtype=np.int64))


def ordinary_binomial_c128(r: int, M: int) -> np.ndarray:
    """binom(m+r-1, m) for m = 0..M as float64."""
    out = np.empty(M + 1)
    out[0] = 1.0
    for m in range(1, M + 1):
        out[m] = out[m - 1] * (m + r - 1) / m
    return out


def qbinom_c128(qc: complex, r: int, M: int) -> np.ndarray:
    """binom(m+r-1, m)_q for m = 0..M via the product
    prod_{i=1..r-1} (1-q^{m+i})/(1-q^i)."""
    m = np.arange(M + 1, dtype=np.int64)
    out = np.ones(M + 1, dtype=np.complex128)
    qm = np.power(qc, m)
    qpow_i = 1.0 + 0.0j
    for i in range(1, r):
        qpow_i *= qc
        out *= (1.0 - qm * qpow_i) / (1.0 - qpow_i)
    return out


def chi_c128(chi: DirichletCharacter, M: int) -> np.ndarray:
    table = np.array([complex(v) for v in chi.values], dtype=np.complex128)
    reps = M // chi.conductor + 1
    return np.tile(table, reps)[:M + 1]


def convolve_c128(arrays: Sequence[np.ndarray], M: int) -> np.ndarray:
    acc = arrays[0]
    for a in arrays[1:]:
        acc = np.convolve(acc, a)[:M + 1]
    return acc


# ---------------------------------------------------------------------------
# weight builders, generic lane (exact rationals or mpmath scalars)

def geometric_generic(base: Number, M: int) -> list[Number]:
    out = [ONE]
    for _ in range(M):
        out.append(out[-1] * base)
    return out


def ordinary_binomial_generic(r: int, M: int) -> list[Number]:
    return [Number.exact(math.comb(m + r - 1, m)) for m in range(M + 1)]


def qbinom_generic(q: QParam, r: int, M: int) -> list[Number]:
    table = q_binomial_table(q, M + r - 1)
    return [table.coefficient(m + r - 1, m) for m in range(M + 1)]


def elementwise(*lists: Sequence[Number]) -> list[Number]:
    out = []
    for vals in zip(*lists):
        acc = vals[0]
        for v in vals[1:]:
            acc = acc * v
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# bracket bounds

def bracket_range(qc: complex, qx_mod: float, tail_decay: float):
    """Uniform bounds on |[y]_q| = |1-q^y|/|1-q| over a summation region
    where |q^{y-x}| <= 1 everywhere and |q^{y-x}| <= tail_decay on the tail.

    Returns (K, L): K an upper bound valid everywhere, L a lower bound valid
    on the tail (None when the region cannot be certified).
    """
    omq = abs(1.0 - qc)
    K = (1.0 + qx_mod) / omq
    delta = qx_mod * tail_decay
    L = (1.0 - delta) / omq if delta < 1.0 else None
    return K, L


def power_bound(K: float, L: Optional[float], expo: complex, zeta: bool) -> float:
    """Upper bound for |bracket^n| (poly) or |bracket^{-s}| (zeta) on the tail."""
    if not zeta:
        n = int(expo.real)
        return K ** n
    if L is None or L <= 0.0:
        raise TailBoundError(
            "cannot certify the tail: bracket lower bound degenerates; "
            "increase max_terms or move x away from the pole set")
    re = expo.real
    mag = L ** (-re) if re >= 0 else K ** (-re)
    return mag * math.exp(math.pi * abs(expo.imag))


def geometric_tail(rho: float, r: int, M: int, prefactor: float) -> float:
    """prefactor * sum_{m>M} binom(m+r-1,m) rho^m, certified upper bound."""
    if not 0.0 <= rho < 1.0:
        raise DivergenceError(f"series ratio {rho} is not inside [0,1)")
    return prefactor * rho ** (M + 1) * (M + 1 + r) ** (r - 1) / (1.0 - rho) ** r


def lattice_tail(rhos: Sequence[float], M: int, prefactor: float) -> float:
    """Union bound for the complement of the box [0,M]^r under per-coordinate
    geometric weights rho_j^{m_j}."""
    for rho in rhos:
        if not 0.0 <= rho < 1.0:
            raise DivergenceError(f"lattice ratio {rho} is not inside [0,1)")
    full = 1.0
    for rho in rhos:
        full /= (1.0 - rho)
    total = 0.0
    for rho in rhos:
        total += rho ** (M + 1) * full
    return prefactor * total


# ---------------------------------------------------------------------------
# evaluators: collapsed single-index series

def sum_collapsed_c128(coeffs: np.ndarray, qc: complex, xc: complex,
                       expo, zeta: bool, backend=None) -> complex:
    kb = get_backend(backend)
    M1 = len(coeffs)
    qx = qc ** xc
    qpow = qx * np.power(qc, np.arange(M1, dtype=np.int64))
    inv_omq = 1.0 / (1.0 - qc)
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    if zeta:
        out = kb.collapsed_zeta(c, qpow, inv_omq, complex(expo))
    else:
        out = kb.collapsed_poly(c, qpow, inv_omq, int(expo))
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise ValueError("[m+x]_q = 0 encountered in the summation range")
    return out


def sum_collapsed_generic(coeffs: Sequence[Number], q: Number, x: Number,
                          expo, zeta: bool) -> Number:
    qpow = qpow_number(q, x)
    inv_omq = ONE / (1 - q)
    total = None
    for c in coeffs:
        if not c.is_zero():
            br = (1 - qpow) * inv_omq
            if zeta:
                term = c * pow_principal(br, -Number.of(expo))
            else:
                term = c * pow_principal(br, int(expo)) if int(expo) else c
            total = term if total is None else total + term
        qpow = qpow * q
    return ZERO if total is None else total


# ---------------------------------------------------------------------------
# evaluators: r-fold lattice series

def _check_cap(M: int, r: int, cap: int) -> None:
    if (M + 1) ** r > cap:
        raise TermCapError(
            f"(M+1)^r = {(M + 1) ** r} exceeds the term cap {cap}; "
            "lower max_terms or raise term_cap")


def sum_barnes_c128(U: np.ndarray, qa: Sequence[complex], qc: complex,
                    xc: complex, expo, zeta: bool, cap: int,
                    backend=None) -> complex:
    r, M1 = U.shape
    _check_cap(M1 - 1, r, cap)
    kb = get_backend(backend)
    PP = np.vstack([np.power(a, np.arange(M1, dtype=np.int64)) for a in qa])
    qx = qc ** xc
    inv_omq = 1.0 / (1.0 - qc)
    if zeta:
        out = kb.barnes_zeta(U, PP, qx, inv_omq, complex(expo))
    else:
        out = kb.barnes_poly(U, PP, qx, inv_omq, int(expo))
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise ValueError("vanishing bracket encountered in the lattice sum")
    return out


def sum_barnes_generic(Ujs: Sequence[Sequence[Number]], avals: Sequence[Number],
                       q: Number, x: Number, expo, zeta: bool,
                       cap: int) -> Number:
    r = len(Ujs)
    M1 = len(Ujs[0])
    _check_cap(M1 - 1, r, cap)
    qa_pows = []
    for a in avals:
        base = qpow_number(q, a)
        qa_pows.append(geometric_generic(base, M1 - 1))
    qx = qpow_number(q, x)
    inv_omq = ONE / (1 - q)
    total = None
    for idx in itertools.product(range(M1), repeat=r):
        w = None
        p = qx
        skip = False
        for j, m in enumerate(idx):
            u = Ujs[j][m]
            if u.is_zero():
                skip = True
                break
            w = u if w is None else w * u
            p = p * qa_pows[j][m]
        if skip:
            continue
        br = (1 - p) * inv_omq
        if zeta:
            term = w * pow_principal(br, -Number.of(expo))
        else:
            n = int(expo)
            term = w * pow_principal(br, n) if n else w
        total = term if total is None else total + term
    return ZERO if total is None else total


def enforce_bound(bound: float, cfg: SeriesConfig) -> None:
    if cfg.enforce_tail_bound and bound > cfg.tolerance:
        raise TailBoundError(
            f"certified tail bound {bound:.3g} exceeds tolerance "
            f"{cfg.tolerance:.3g}; increase max_terms")
