"""q-arithmetic primitives: q-numbers, q-factorials, Gaussian binomial
coefficients, and q-Pochhammer symbols.

Conventions: [x]_q = (1 - q^x)/(1 - q), [n]_q! = [n]_q [n-1]_q ... [1]_q,
binom(n,k)_q = [n]_q!/([n-k]_q! [k]_q!), (x:q)_n = prod_{i=1..n} (1 - x q^{i-1}).
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .scalar import (Number, NumberLike, ONE, QParam, ZERO, ExactModeError,
                     pow_principal)


def q_number(x: NumberLike, q) -> Number:
    """The q-number [x]_q = (1 - q^x)/(1 - q).

    Exact when both q and x are exact and x is an integer; otherwise the
    principal branch of q^x is used.
    """
    q = QParam.of(q)
    x = Number.of(x)
    if q.is_exact and x.is_exact:
        if not x.is_integer():
            raise ExactModeError(
                f"[x]_q with non-integer exact x={x.fraction}; use float mode")
        qf = q.value.fraction
        return Number((1 - qf ** x.as_integer()) / (1 - qf))
    qx = pow_principal(q.value, x)
    return (1 - qx) / (1 - q.value)


def q_factorial(n: int, q) -> Number:
    """[n]_q! as the product of q-numbers; the empty product is 1."""
    if n < 0:
        raise ValueError("q-factorial needs n >= 0")
    q = QParam.of(q)
    out = ONE
    for k in range(1, n + 1):
        out = out * q_number(k, q)
    return out


class QBinomialTable:
    """Lazily grown triangle of Gaussian binomial coefficients at a fixed q.

    Rows are built by the Pascal-type rule
    binom(n,k)_q = binom(n-1,k-1)_q + q^k binom(n-1,k)_q,
    which keeps exact arithmetic free of cancellation.  Row extension is
    lock-guarded so concurrent readers never observe a partial row.
    """

    def __init__(self, q):
        self.q = QParam.of(q)
        self._rows = [[ONE]]
        self._lock = threading.Lock()
        self._qpow = [ONE]  # cache of q^k

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _q_to(self, k: int) -> Number:
        while len(self._qpow) <= k:
            self._qpow.append(self._qpow[-1] * self.q.value)
        return self._qpow[k]

    def ensure(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            while self.max_n < n:
                prev = self._rows[-1]
                m = len(self._rows)
                row = [ONE]
                for k in range(1, m):
                    row.append(prev[k - 1] + self._q_to(k) * prev[k])
                row.append(ONE)
                self._rows.append(row)

    def coefficient(self, n: int, k: int) -> Number:
        if k < 0 or k > n:
            return ZERO
        self.ensure(n)
        return self._rows[n][k]


_tables: dict[QParam, QBinomialTable] = {}
_tables_lock = threading.Lock()


def q_binomial_table(q, max_n: int = 0) -> QBinomialTable:
    """Memoized per-q table, grown to cover max_n."""
    q = QParam.of(q)
    with _tables_lock:
        table = _tables.get(q)
        if table is None:
            table = _tables[q] = QBinomialTable(q)
    table.ensure(max_n)
    return table


def q_binomial(n: int, k: int, q) -> Number:
    """Gaussian binomial binom(n,k)_q; 0 outside 0 <= k <= n.

    Exact mode uses the Pascal-type recurrence; float mode the
    falling-factorial quotient [n]_q ... [n-k+1]_q / [k]_q!.
    """
    if n < 0:
        raise ValueError("q-binomial needs n >= 0")
    q = QParam.of(q)
    if k < 0 or k > n:
        return ZERO
    if q.is_exact:
        return q_binomial_table(q, n).coefficient(n, k)
    k = min(k, n - k)
    num = ONE
    for i in range(k):
        num = num * q_number(n - i, q)
    return num / q_factorial(k, q)


def q_pochhammer(x: NumberLike, q, n: int) -> Number:
    """(x:q)_n = prod_{i=1..n} (1 - x q^{i-1}); the empty product is 1."""
    if n < 0:
        raise ValueError("q-Pochhammer needs n >= 0")
    q = QParam.of(q)
    x = Number.of(x)
    out = ONE
    qpow = ONE
    for _ in range(n):
        out = out * (1 - x * qpow)
        qpow = qpow * q.value
    return out


def q_bracket_two(q) -> Number:
    """[2]_q = 1 + q, the normalizing factor of every family."""
    q = QParam.of(q)
    return 1 + q.value


def gauss_expansion_rhs(x: NumberLike, q, n: int) -> Number:
    """Sum form of the first binomial formula:
    sum_i binom(n,i)_q q^{i(i-1)/2} (-x)^i, equal to (x:q)_n."""
    q = QParam.of(q)
    x = Number.of(x)
    total = ONE  # i = 0 term
    xpow = ONE
    for i in range(1, n + 1):
        xpow = xpow * (-x)
        qpow = pow_principal(q.value, i * (i - 1) // 2)
        total = total + q_binomial(n, i, q) * qpow * xpow
    return total
