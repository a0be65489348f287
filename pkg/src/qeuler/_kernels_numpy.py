"""Pure-numpy kernels: the fallback backend.

Interface contract (shared with the numba backend): coefficient arrays are
complex128, exponents arrive as python int (polynomial case) or complex
(zeta case), and a vanishing bracket in a zeta sum surfaces as a NaN result
so the caller can raise a meaningful error.
"""

import numpy as np

_TINY = 1e-300


def collapsed_poly(c, qpow, inv_omq, n):
    br = (1.0 - qpow) * inv_omq
    if n == 0:
        return complex(np.sum(c))
    return complex(np.sum(c * br ** n))


def collapsed_zeta(c, qpow, inv_omq, s):
    br = (1.0 - qpow) * inv_omq
    if np.min(np.abs(br)) < _TINY:
        return complex(float("nan"), float("nan"))
    return complex(np.sum(c * br ** (-s)))


def _fold_inner(U, PP):
    # flatten coordinates 1..r-1 into one weight/power pair
    r = U.shape[0]
    W = U[r - 1]
    P = PP[r - 1]
    for j in range(r - 2, 0, -1):
        W = np.outer(U[j], W).ravel()
        P = np.outer(PP[j], P).ravel()
    return W, P


def barnes_poly(U, PP, qx, inv_omq, n):
    r, M1 = U.shape
    if r == 1:
        return collapsed_poly(U[0], qx * PP[0], inv_omq, n)
    W, P = _fold_inner(U, PP)
    total = 0.0 + 0.0j
    for m0 in range(M1):
        br = (1.0 - qx * PP[0, m0] * P) * inv_omq
        if n == 0:
            total += U[0, m0] * np.sum(W)
        else:
            total += U[0, m0] * np.sum(W * br ** n)
    return complex(total)


def barnes_zeta(U, PP, qx, inv_omq, s):
    r, M1 = U.shape
    if r == 1:
        return collapsed_zeta(U[0], qx * PP[0], inv_omq, s)
    W, P = _fold_inner(U, PP)
    total = 0.0 + 0.0j
    for m0 in range(M1):
        br = (1.0 - qx * PP[0, m0] * P) * inv_omq
        if np.min(np.abs(br)) < _TINY:
            return complex(float("nan"), float("nan"))
        total += U[0, m0] * np.sum(W * br ** (-s))
    return complex(total)
