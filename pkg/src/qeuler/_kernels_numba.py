"""Numba-jitted kernels: the default backend when numba is importable.

Same contract as the numpy module.  The lattice sums walk an odometer over
the index box instead of materialising the flattened outer product, so the
memory footprint stays O(r * M) regardless of r.
"""

import cmath

import numpy as np
from numba import njit

_TINY = 1e-300


@njit(cache=True)
def _ipow(z, n):
    p = 1.0 + 0.0j
    for _ in range(n):
        p *= z
    return p


@njit(cache=True)
def collapsed_poly(c, qpow, inv_omq, n):
    total = 0.0 + 0.0j
    for m in range(c.shape[0]):
        br = (1.0 - qpow[m]) * inv_omq
        total += c[m] * _ipow(br, n)
    return total


@njit(cache=True)
def collapsed_zeta(c, qpow, inv_omq, s):
    total = 0.0 + 0.0j
    for m in range(c.shape[0]):
        br = (1.0 - qpow[m]) * inv_omq
        if abs(br) < _TINY:
            return complex(np.nan, np.nan)
        total += c[m] * cmath.exp(-s * cmath.log(br))
    return total


@njit(cache=True)
def barnes_poly(U, PP, qx, inv_omq, n):
    r = U.shape[0]
    M1 = U.shape[1]
    idx = np.zeros(r, dtype=np.int64)
    total = 0.0 + 0.0j
    while True:
        w = 1.0 + 0.0j
        p = qx
        for j in range(r):
            w *= U[j, idx[j]]
            p *= PP[j, idx[j]]
        br = (1.0 - p) * inv_omq
        total += w * _ipow(br, n)
        j = r - 1
        while j >= 0 and idx[j] == M1 - 1:
            idx[j] = 0
            j -= 1
        if j < 0:
            break
        idx[j] += 1
    return total


@njit(cache=True)
def barnes_zeta(U, PP, qx, inv_omq, s):
    r = U.shape[0]
    M1 = U.shape[1]
    idx = np.zeros(r, dtype=np.int64)
    total = 0.0 + 0.0j
    while True:
        w = 1.0 + 0.0j
        p = qx
        for j in range(r):
            w *= U[j, idx[j]]
            p *= PP[j, idx[j]]
        br = (1.0 - p) * inv_omq
        if abs(br) < _TINY:
            return complex(np.nan, np.nan)
        if w != 0.0:
            total += w * cmath.exp(-s * cmath.log(br))
        j = r - 1
        while j >= 0 and idx[j] == M1 - 1:
            idx[j] = 0
            j -= 1
        if j < 0:
            break
        idx[j] += 1
    return total
