import os
import subprocess
import sys

import numpy as np
import pytest

from qeuler.backends import backend_name, get_backend
from qeuler.eulerpoly import BarnesParams, barnes_euler, euler_poly_order
from qeuler.scalar import QParam
from qeuler.series import SeriesConfig


def _has_numba():
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


def test_get_backend_numpy_always_available():
    be = get_backend("numpy")
    assert hasattr(be, "collapsed_poly")
    assert hasattr(be, "barnes_zeta")


def test_get_backend_rejects_unknown():
    with pytest.raises(ValueError):
        get_backend("fortran")


@pytest.mark.skipif(not _has_numba(), reason="numba not installed")
def test_backends_agree_on_collapsed_kernels():
    rng = np.random.default_rng(7)
    M = 300
    c = rng.standard_normal(M + 1) + 1j * rng.standard_normal(M + 1)
    q = 0.4 + 0.25j
    qpow = (q ** np.arange(M + 1)).astype(np.complex128) * (q ** 1)
    inv = 1.0 / (1.0 - q)
    np_be = get_backend("numpy")
    nb_be = get_backend("numba")
    for n in (0, 1, 4):
        a = np_be.collapsed_poly(c, qpow, inv, n)
        b = nb_be.collapsed_poly(c, qpow, inv, n)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))
    for s in (0.5 + 0j, -2.0 + 0j, 1.0 + 3.0j):
        a = np_be.collapsed_zeta(c, qpow, inv, s)
        b = nb_be.collapsed_zeta(c, qpow, inv, s)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


@pytest.mark.skipif(not _has_numba(), reason="numba not installed")
def test_backends_agree_on_barnes_kernels():
    rng = np.random.default_rng(11)
    M = 40
    r = 2
    U = rng.standard_normal((r, M + 1)) + 1j * rng.standard_normal((r, M + 1))
    q = 0.5 + 0.0j
    PP = np.vstack([(q ** 1) ** np.arange(M + 1),
                    (q ** 2) ** np.arange(M + 1)]).astype(np.complex128)
    qx = q ** 1
    inv = 1.0 / (1.0 - q)
    np_be = get_backend("numpy")
    nb_be = get_backend("numba")
    for n in (0, 3):
        a = np_be.barnes_poly(U, PP, qx, inv, n)
        b = nb_be.barnes_poly(U, PP, qx, inv, n)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))
    for s in (0.5 + 0j, 1.0 + 1.0j):
        a = np_be.barnes_zeta(U, PP, qx, inv, s)
        b = nb_be.barnes_zeta(U, PP, qx, inv, s)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_barnes_series_real_for_real_q():
    q = QParam.of(0.5)
    cfg = SeriesConfig(max_terms=200, tolerance=1e-8)
    bp = BarnesParams((1, 2), (0, 0))
    v = barnes_euler(2, bp, q, 1, "series", cfg, with_tail=True)
    assert abs(complex(v.value).imag) < 1e-12


def test_env_flag_selects_backend_in_subprocess():
    code = "import qeuler; print(qeuler.backend_name())"
    for want in ("numpy",) + (("numba",) if _has_numba() else ()):
        env = dict(os.environ, QEULER_BACKEND=want)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        assert out.stdout.strip() == want


def test_env_flag_values_give_identical_series_results():
    code = (
        "from fractions import Fraction\n"
        "import qeuler as Q\n"
        "q = Q.QParam.of(0.5)\n"
        "cfg = Q.SeriesConfig(max_terms=300, tolerance=1e-10)\n"
        "v = Q.euler_poly_order(5, 3, q, 1, 'series', cfg, with_tail=True)\n"
        "z = complex(v.value)\n"
        "print(repr(z.real), repr(z.imag))\n"
    )
    results = []
    for name in ("numpy",) + (("numba",) if _has_numba() else ()):
        env = dict(os.environ, QEULER_BACKEND=name)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        re_s, im_s = out.stdout.split()
        results.append(complex(float(re_s), float(im_s)))
    base = results[0]
    for z in results[1:]:
        assert abs(z - base) <= 1e-12 * max(1.0, abs(base))


def test_backend_name_reports_current():
    assert backend_name() in ("numpy", "numba")
