from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qeuler.qcore import (QBinomialTable, gauss_expansion_rhs, q_binomial,
                          q_binomial_table, q_bracket_two, q_factorial,
                          q_number, q_pochhammer)
from qeuler.scalar import Number, ONE, QParam

Q12 = QParam.of(Fraction(1, 2))

qvals = st.fractions(min_value=Fraction(1, 16), max_value=Fraction(15, 16),
                     max_denominator=32)


def test_q_number_values():
    assert q_number(3, Q12).fraction == Fraction(7, 4)
    assert q_number(0, Q12).fraction == 0
    assert q_number(1, Q12) == ONE


def test_q_number_bracket_composition():
    # [fy]_q = [f]_q [y]_{q^f}
    q = QParam.of(Fraction(2, 5))
    f, y = 3, 4
    lhs = q_number(f * y, q)
    qf = QParam.of(Fraction(2, 5) ** f)
    assert lhs == q_number(f, q) * q_number(y, qf)


def test_q_number_float_noninteger_argument():
    v = q_number(Number.of(0.5), QParam.of(0.25))
    assert complex(v).real == pytest.approx((1 - 0.25 ** 0.5) / 0.75)


def test_q_factorial():
    assert q_factorial(3, Q12).fraction == Fraction(21, 8)
    assert q_factorial(0, Q12) == ONE


def test_q_binomial_values():
    assert q_binomial(2, 1, Q12).fraction == Fraction(3, 2)
    assert q_binomial(4, 2, Q12).fraction == Fraction(35, 16)
    assert q_binomial(5, 0, Q12) == ONE
    assert q_binomial(3, 5, Q12).fraction == 0


@given(qvals, st.integers(min_value=1, max_value=9),
       st.integers(min_value=0, max_value=9))
@settings(max_examples=60)
def test_pascal_rule(qf, n, k):
    # binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
    q = QParam.of(qf)
    lhs = q_binomial(n, k, q)
    qk = Number(qf) ** k if k else ONE
    rhs = q_binomial(n - 1, k - 1, q) + qk * q_binomial(n - 1, k, q)
    assert lhs == rhs


@given(qvals, st.integers(min_value=0, max_value=9))
@settings(max_examples=40)
def test_binomial_symmetry(qf, n):
    q = QParam.of(qf)
    for k in range(n + 1):
        assert q_binomial(n, k, q) == q_binomial(n, n - k, q)


def test_table_grows_on_demand():
    t = q_binomial_table(Q12, max_n=6)
    assert t.max_n >= 6
    assert t.coefficient(6, 3) == q_binomial(6, 3, Q12)
    assert t.coefficient(0, 0) == ONE
    # requests past the built triangle extend it
    assert t.coefficient(9, 4) == q_binomial(9, 4, Q12)
    assert t.max_n >= 9
    # outside the triangle
    assert t.coefficient(4, 9).fraction == 0


def test_table_ratio_formula_agrees():
    # product form against the Pascal build
    qf = Fraction(3, 7)
    q = QParam.of(qf)
    for n in range(8):
        for k in range(n + 1):
            num = den = Fraction(1)
            for i in range(1, k + 1):
                num *= 1 - qf ** (n - k + i)
                den *= 1 - qf ** i
            assert q_binomial(n, k, q).fraction == num / den


def test_pochhammer_values():
    x = Number.exact(1, 2)
    assert q_pochhammer(x, Q12, 2).fraction == Fraction(3, 8)
    assert q_pochhammer(x, Q12, 0) == ONE


def test_bracket_two():
    assert q_bracket_two(Number(Fraction(1, 2))).fraction == Fraction(3, 2)


@given(qvals,
       st.fractions(min_value=-2, max_value=2, max_denominator=16),
       st.integers(min_value=0, max_value=8))
@settings(max_examples=60)
def test_gauss_expansion(qf, xf, n):
    # (x:q)_n = sum_i binom(n,i)_q q^{i(i-1)/2} (-x)^i, exact
    q = QParam.of(qf)
    x = Number(xf)
    assert q_pochhammer(x, q, n) == gauss_expansion_rhs(x, q, n)


def test_negative_binomial_truncation_converges():
    # 1/(x:q)_n = sum_i binom(n+i-1,i)_q x^i for |x| < 1
    q = QParam.of(Fraction(1, 2))
    x = Number.exact(1, 3)
    n = 3
    lhs = ONE / q_pochhammer(x, q, n)
    t = q_binomial_table(q, n + 120)
    total = Number.exact(0)
    xpow = ONE
    for i in range(121):
        total = total + t.coefficient(n + i - 1, i) * xpow
        xpow = xpow * x
    assert abs(complex(lhs) - complex(total)) < 1e-30
