from fractions import Fraction

import pytest

from qeuler.characters import character_from_table, trivial_character
from qeuler.eulerpoly import (BarnesParams, barnes_euler, euler_chi_hr,
                              euler_chi_order, euler_poly_hr,
                              euler_poly_order)
from qeuler.scalar import ExactModeError, Number, ONE, QParam
from qeuler.series import DivergenceError, SeriesConfig
from qeuler.verify import barnes_chi_residue_reference
from qeuler.zeta import (ZetaQuery, barnes_l, barnes_zeta, l_multi, l_multi_h,
                         zeta_multi, zeta_multi_h)

Q12 = QParam.of(Fraction(1, 2))
Q12F = QParam.of(0.5)
CHI3 = character_from_table(3, [0, 1, -1])
CFG = SeriesConfig(max_terms=400, tolerance=1e-10)


def _close(a, b, tol):
    return abs(complex(a) - complex(b)) <= tol


# -- multiple zeta ----------------------------------------------------------

def test_zeta_at_zero_is_one_exact():
    for r in (1, 2, 3):
        assert zeta_multi(0, r, Q12, 2, CFG) == ONE
    assert zeta_multi(0, 3, QParam.of(Fraction(1, 3)), 2, CFG) == ONE


def test_zeta_auto_routes_to_polynomial_at_negative_integers():
    for (n, r) in [(1, 1), (3, 2), (5, 3)]:
        z = zeta_multi(-n, r, Q12, 1, CFG)
        assert z.is_exact
        assert z == euler_poly_order(n, r, Q12, 1, "closed")


def test_zeta_series_interpolates_polynomials():
    for (n, r) in [(0, 1), (2, 2), (4, 3)]:
        z = zeta_multi(-n, r, Q12F, 1, CFG, method="series", with_tail=True)
        p = euler_poly_order(n, r, Q12F, 1, "closed")
        assert _close(z.value, p, 1e-9 + z.tail_bound)


def test_zeta_generic_s_runs_with_bound():
    z = zeta_multi(0.75, 2, Q12F, 1, CFG, with_tail=True)
    assert z.tail_bound > 0
    assert abs(complex(z.value)) > 0


def test_zeta_complex_s():
    z = zeta_multi(complex(0.5, 2.0), 1, Q12F, 1, CFG, with_tail=True)
    assert z.tail_bound < 1e-80  # e^{pi |Im s|} inflates but stays certified


def test_zeta_rejects_nonpositive_integer_x():
    for bad in (0, -1, -2.0):
        with pytest.raises(ValueError):
            zeta_multi(1.5, 1, Q12F, bad, CFG)


def test_zeta_exact_lane_needs_integer_s():
    with pytest.raises(ExactModeError):
        zeta_multi(Fraction(1, 2), 1, Q12, 1, CFG, method="series")
    # integer s in the exact lane gives an exact partial sum
    z = zeta_multi(2, 1, Q12, 1, CFG, method="series", with_tail=True)
    assert z.value.is_exact


# -- weighted (h, r) zeta ---------------------------------------------------

def test_zeta_h_frozen_value():
    # s = 0, h = r: [2]_q^r / (-q:q)_r
    v = zeta_multi_h(0, 2, 2, Q12, 1, CFG)
    assert v.fraction == Fraction(6, 5)


def test_zeta_h_interpolates():
    for (n, h, r) in [(0, 1, 1), (2, 2, 2), (3, 4, 3), (4, 5, 3)]:
        z = zeta_multi_h(-n, h, r, Q12F, 1, CFG, method="series",
                         with_tail=True)
        p = euler_poly_hr(n, h, r, Q12F, 1, "closed")
        assert _close(z.value, p, 1e-9 + z.tail_bound)


def test_zeta_h_guard_hits_both_methods():
    with pytest.raises(DivergenceError):
        zeta_multi_h(1.5, 1, 2, Q12F, 1, CFG, method="series")
    with pytest.raises(DivergenceError):
        zeta_multi_h(-2, 1, 2, Q12, 1, CFG)  # auto route guards too


# -- Dirichlet l ------------------------------------------------------------

def test_l_interpolates_chi_order():
    for (n, r) in [(0, 1), (2, 2), (4, 2)]:
        z = l_multi(-n, CHI3, r, Q12F, 1, CFG, with_tail=True)
        p = euler_chi_order(n, r, CHI3, Q12F, 1, CFG, method="closed")
        assert _close(z.value, p, 1e-9 + z.tail_bound)


def test_l_trivial_matches_zeta():
    triv = trivial_character()
    a = l_multi(0.5, triv, 2, Q12F, 1, CFG, with_tail=True)
    b = zeta_multi(0.5, 2, Q12F, 1, CFG, method="series", with_tail=True)
    assert _close(a.value, b.value, 1e-12 + a.tail_bound + b.tail_bound)


def test_l_h_direct_interpolates_distribution():
    for (n, h, r) in [(0, 2, 1), (2, 3, 2), (3, 2, 1)]:
        z = l_multi_h(-n, CHI3, h, r, Q12F, 1, CFG, method="direct",
                      with_tail=True)
        p = euler_chi_hr(n, h, r, CHI3, Q12F, 1, "distribution", CFG)
        assert _close(z.value, p, 1e-9 + z.tail_bound)


def test_l_h_factored_agrees_with_direct():
    for s in (-2, 0.5, 1.25):
        a = l_multi_h(s, CHI3, 3, 2, Q12F, 1, CFG, method="direct",
                      with_tail=True)
        b = l_multi_h(s, CHI3, 3, 2, Q12F, 1, CFG, method="factored",
                      with_tail=True)
        assert _close(a.value, b.value, 1e-9 + a.tail_bound + b.tail_bound)


def test_l_h_guard():
    with pytest.raises(DivergenceError):
        l_multi_h(0.5, CHI3, 0, 2, Q12F, 1, CFG)


# -- Barnes zeta ------------------------------------------------------------

def test_barnes_zeta_interpolates():
    bp = BarnesParams((1, 2), (0, 1))
    for n in range(4):
        z = barnes_zeta(-n, bp, Q12F, 1, CFG, with_tail=True)
        p = barnes_euler(n, bp, Q12F, 1, "closed")
        assert _close(z.value, p, 1e-9 + z.tail_bound)


def test_barnes_zeta_generic_s_bound_positive():
    bp = BarnesParams((1, 2), (0, 0))
    z = barnes_zeta(1.5, bp, Q12F, 1, CFG, with_tail=True)
    assert 0 < z.tail_bound < 1e-60


def test_barnes_zeta_rejects_negative_offsets():
    bp = BarnesParams((1,), (-1,))
    with pytest.raises(DivergenceError):
        barnes_zeta(0.5, bp, Q12F, 1, CFG)


def test_barnes_l_interpolates_residue_collapse():
    bp = BarnesParams((1, 2), (0, 1))
    for n in range(3):
        z = barnes_l(-n, CHI3, bp, Q12F, 1, CFG, with_tail=True)
        ref = barnes_chi_residue_reference(n, CHI3, bp, Q12F, Number.of(1.0),
                                           CFG)
        assert _close(z.value, ref, 1e-9 + z.tail_bound)


def test_barnes_l_trivial_matches_barnes_zeta():
    bp = BarnesParams((1, 2), (0, 0))
    triv = trivial_character()
    a = barnes_l(0.5, triv, bp, Q12F, 1, CFG, with_tail=True)
    b = barnes_zeta(0.5, bp, Q12F, 1, CFG, with_tail=True)
    assert _close(a.value, b.value, 1e-12 + a.tail_bound + b.tail_bound)


# -- query object -----------------------------------------------------------

def test_zeta_query_dispatch():
    q = ZetaQuery("zeta", s=0, x=1, r=2)
    assert q.evaluate(Q12, CFG) == ONE
    q = ZetaQuery("l", s=-2, x=1, r=1, chi=CHI3)
    v = q.evaluate(Q12F, CFG)
    ref = l_multi(-2, CHI3, 1, Q12F, 1, CFG)
    assert _close(v, ref, 1e-12)


def test_zeta_query_validation():
    with pytest.raises(ValueError):
        ZetaQuery("nope", s=0, x=1)
    with pytest.raises(ValueError):
        ZetaQuery("l", s=0, x=1)  # missing character
    with pytest.raises(ValueError):
        ZetaQuery("zeta-h", s=0, x=1, r=1)  # missing h
    with pytest.raises(ValueError):
        ZetaQuery("zeta", s=0, x=0)  # excluded x
