"""Compare the numba kernels against the pure-numpy fallback.

Run as a script:  python benchmarks/bench_backends.py [--repeat N]

Workloads are the two hot shapes: the collapsed single-index summation
(order-r / character / weighted families) and the Barnes lattice fold.
The first numba call pays JIT compilation; it is timed separately and
excluded from the steady-state figures.
"""

import argparse
import time

import numpy as np

from qeuler.backends import get_backend


def _collapsed_inputs(M):
    rng = np.random.default_rng(3)
    c = rng.standard_normal(M + 1) + 1j * rng.standard_normal(M + 1)
    q = 0.7 + 0.1j
    qpow = q * q ** np.arange(M + 1)
    return c.astype(np.complex128), qpow.astype(np.complex128), 1.0 / (1.0 - q)


def _barnes_inputs(M, r):
    rng = np.random.default_rng(5)
    U = (rng.standard_normal((r, M + 1))
         + 1j * rng.standard_normal((r, M + 1))).astype(np.complex128)
    q = 0.6 + 0.0j
    PP = np.vstack([(q ** (j + 1)) ** np.arange(M + 1) for j in range(r)])
    return U, PP.astype(np.complex128), q ** 1, 1.0 / (1.0 - q)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=7)
    ap.add_argument("-M", type=int, default=4000)
    args = ap.parse_args()

    np_be = get_backend("numpy")
    try:
        nb_be = get_backend("numba")
    except RuntimeError as exc:
        print(f"numba backend unavailable ({exc}); nothing to compare")
        return

    c, qpow, inv = _collapsed_inputs(args.M)
    U, PP, qx, binv = _barnes_inputs(160, 2)

    t0 = time.perf_counter()
    nb_be.collapsed_poly(c, qpow, inv, 3)
    nb_be.collapsed_zeta(c, qpow, inv, 0.5 + 1j)
    nb_be.barnes_poly(U, PP, qx, binv, 3)
    nb_be.barnes_zeta(U, PP, qx, binv, 0.5 + 0j)
    print(f"numba JIT warmup: {time.perf_counter() - t0:.2f}s "
          f"(cached on later runs)")

    rows = [
        ("collapsed poly  n=3", lambda be: be.collapsed_poly(c, qpow, inv, 3)),
        ("collapsed zeta  s=0.5+1i",
         lambda be: be.collapsed_zeta(c, qpow, inv, 0.5 + 1j)),
        ("barnes poly     r=2 n=3", lambda be: be.barnes_poly(U, PP, qx, binv, 3)),
        ("barnes zeta     r=2", lambda be: be.barnes_zeta(U, PP, qx, binv, 0.5 + 0j)),
    ]
    print(f"{'workload':<26} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, call in rows:
        a = _time(lambda: call(np_be), args.repeat)
        b = _time(lambda: call(nb_be), args.repeat)
        print(f"{label:<26} {a * 1e6:>8.1f}us {b * 1e6:>8.1f}us "
              f"{a / b:>7.1f}x")
        va, vb = call(np_be), call(nb_be)
        assert abs(va - vb) <= 1e-9 * max(1.0, abs(va)), (label, va, vb)


if __name__ == "__main__":
    main()
