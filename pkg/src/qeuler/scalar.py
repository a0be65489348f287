"""Scalar tower shared by the whole package.

Every quantity is a :class:`Number`: an exact rational (arbitrary precision,
always reduced) or a complex float at a stated binary precision.  53-bit
floats are plain Python complex; higher precisions run on mpmath.  Arithmetic
between exact values stays exact; any operation touching a float yields a
float at the larger of the two precisions.

Powers use the principal branch throughout: q^x = exp(x * Log q) with the
imaginary part of Log in (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Union

import mpmath

DOUBLE_PREC = 53

# Dividing by a float this small would overflow double range; treat it as a
# masked zero rather than producing a silent infinity.
UNDERFLOW_GUARD = 1e-280


class ExactModeError(ValueError):
    """An operation that cannot stay exact was requested on exact operands."""


NumberLike = Union["Number", int, float, complex, Fraction]


def _to_mpc(v, prec: int) -> mpmath.mpc:
    with mpmath.workprec(prec):
        if isinstance(v, Fraction):
            return mpmath.mpc(mpmath.mpf(v.numerator) / mpmath.mpf(v.denominator))
        if isinstance(v, complex):
            return mpmath.mpc(v.real, v.imag)
        return mpmath.mpc(v)


class Number:
    """Immutable scalar: exact ``Fraction`` or complex float.

    Use :meth:`Number.of` to build one from a Python numeric.  The payload is
    a ``Fraction`` (exact), a ``complex`` (53-bit float), or an ``mpmath.mpc``
    (higher precision).
    """

    __slots__ = ("_v", "_prec")

    def __init__(self, value, prec=None):
        if isinstance(value, Fraction):
            if prec is not None:
                raise TypeError("exact values carry no precision")
        elif isinstance(value, complex):
            if prec != DOUBLE_PREC:
                raise TypeError("complex payload must be 53-bit")
        elif isinstance(value, (mpmath.mpc, mpmath.mpf)):
            if prec is None or prec <= DOUBLE_PREC:
                raise TypeError("mpmath payload needs precision > 53")
            if isinstance(value, mpmath.mpf):
                # widen to mpc without re-rounding at the ambient precision
                with mpmath.workprec(prec):
                    value = mpmath.mpc(value)
        else:
            raise TypeError(f"unsupported payload {type(value).__name__}")
        object.__setattr__(self, "_v", value)
        object.__setattr__(self, "_prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("Number is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def of(cls, v: NumberLike) -> "Number":
        if isinstance(v, Number):
            return v
        if isinstance(v, bool):
            raise TypeError("bool is not a Number")
        if isinstance(v, (int, Fraction)):
            return cls(Fraction(v))
        if isinstance(v, float):
            return cls(complex(v, 0.0), DOUBLE_PREC)
        if isinstance(v, complex):
            return cls(v, DOUBLE_PREC)
        if isinstance(v, (mpmath.mpf, mpmath.mpc)):
            return cls(mpmath.mpc(v), mpmath.mp.prec)
        if hasattr(v, "__index__"):  # numpy integer scalars
            return cls(Fraction(int(v)))
        raise TypeError(f"cannot coerce {type(v).__name__} to Number")

    @classmethod
    def exact(cls, num, den=1) -> "Number":
        return cls(Fraction(num, den))

    # -- inspection --------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return isinstance(self._v, Fraction)

    @property
    def precision(self):
        """None for exact values, bits of working precision otherwise."""
        return self._prec

    @property
    def value(self):
        """The raw payload: Fraction, complex, or mpmath.mpc."""
        return self._v

    @property
    def fraction(self) -> Fraction:
        if not self.is_exact:
            raise ExactModeError("not an exact value")
        return self._v

    def to_complex(self) -> complex:
        v = self._v
        if isinstance(v, Fraction):
            return complex(float(v), 0.0)
        if isinstance(v, complex):
            return v
        return complex(float(v.real), float(v.imag))

    def modulus(self) -> float:
        """|self| as a double; exact inputs are rounded."""
        v = self._v
        if isinstance(v, Fraction):
            return abs(float(v))
        if isinstance(v, complex):
            return abs(v)
        with mpmath.workprec(self._prec):
            return float(mpmath.fabs(v))

    def is_zero(self) -> bool:
        return self._v == 0

    def is_integer(self) -> bool:
        v = self._v
        if isinstance(v, Fraction):
            return v.denominator == 1
        if isinstance(v, complex):
            return v.imag == 0.0 and v.real == int(v.real)
        return v.imag == 0 and v.real == mpmath.floor(v.real)

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not an integer")
        v = self._v
        if isinstance(v, Fraction):
            return v.numerator
        if isinstance(v, complex):
            return int(v.real)
        return int(v.real)

    # -- arithmetic --------------------------------------------------------

    def _binop(self, other, op, swap=False):
        try:
            other = Number.of(other)
        except TypeError:
            return NotImplemented
        a, b = (other, self) if swap else (self, other)
        if a.is_exact and b.is_exact:
            return Number(op(a._v, b._v))
        prec = max(a._prec or DOUBLE_PREC, b._prec or DOUBLE_PREC)
        if prec <= DOUBLE_PREC:
            av = a.to_complex()
            bv = b.to_complex()
            return Number(op(av, bv), DOUBLE_PREC)
        with mpmath.workprec(prec):
            av = _to_mpc(a._v, prec)
            bv = _to_mpc(b._v, prec)
            return Number(op(av, bv), prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: a - b, swap=True)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    @staticmethod
    def _checked_div(a, b):
        if isinstance(b, Fraction):
            if b == 0:
                raise ZeroDivisionError("division by exact zero")
        elif abs(b) < UNDERFLOW_GUARD:
            raise ZeroDivisionError(
                f"division by float of modulus {abs(b):.3g} below the underflow guard")
        return a / b

    def __truediv__(self, other):
        return self._binop(other, Number._checked_div)

    def __rtruediv__(self, other):
        return self._binop(other, Number._checked_div, swap=True)

    def __neg__(self):
        if self.is_exact:
            return Number(-self._v)
        return Number(-self._v, self._prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.is_exact:
            return Number(abs(self._v))
        if isinstance(self._v, complex):
            return Number(complex(abs(self._v), 0.0), DOUBLE_PREC)
        with mpmath.workprec(self._prec):
            return Number(mpmath.mpc(mpmath.fabs(self._v)), self._prec)

    def __pow__(self, other):
        return pow_principal(self, other)

    # -- comparison / misc -------------------------------------------------

    def __eq__(self, other):
        try:
            other = Number.of(other)
        except TypeError:
            return NotImplemented
        a, b = self._v, other._v
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a == b
        return complex(self.to_complex()) == complex(other.to_complex())

    def __hash__(self):
        if self.is_exact:
            return hash(self._v)
        return hash(self.to_complex())

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        if self.is_exact:
            return f"Number({self._v})"
        if isinstance(self._v, complex):
            return f"Number({self._v!r})"
        return f"Number(mpc{self._v}, prec={self._prec})"


ZERO = Number.exact(0)
ONE = Number.exact(1)
TWO = Number.exact(2)


def _as_int_exponent(e: Number):
    """Return the integer value of e when it is exactly an integer, else None."""
    v = e.value
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else None
    if isinstance(v, complex):
        if v.imag == 0.0 and v.real == int(v.real) and abs(v.real) <= 2**53:
            return int(v.real)
        return None
    if v.imag == 0 and v.real == mpmath.floor(v.real):
        return int(v.real)
    return None


def pow_principal(base: NumberLike, exponent: NumberLike, *,
                  require_exact: bool = False) -> Number:
    """base ** exponent with the principal branch for non-integer exponents.

    Integer exponents on exact bases stay exact.  A non-integer exponent
    promotes to float (principal branch exp(e * Log b), Log imaginary part in
    (-pi, pi]); with require_exact=True that promotion is refused instead.
    Exponent 0 returns 1 for any nonzero base.
    """
    base = Number.of(base)
    exponent = Number.of(exponent)
    n = _as_int_exponent(exponent)

    if base.is_zero():
        if n is not None and n > 0:
            return base
        raise ValueError("zero base with non-positive exponent")

    if n is not None:
        if n == 0:
            return ONE if base.is_exact else Number.of(1.0 + 0.0j)
        if base.is_exact:
            return Number(base.fraction ** n)
        if isinstance(base.value, complex):
            return Number(base.value ** n, DOUBLE_PREC)
        with mpmath.workprec(base.precision):
            return Number(mpmath.power(base.value, n), base.precision)

    if require_exact:
        raise ExactModeError(
            f"non-integer exponent {exponent!r} requested in exact mode")
    if base.is_exact and exponent.is_exact:
        # promote: principal branch is a float notion
        return pow_principal(to_float(base), to_float(exponent))

    prec = max(base.precision or DOUBLE_PREC, exponent.precision or DOUBLE_PREC)
    if prec <= DOUBLE_PREC:
        b = base.to_complex()
        e = exponent.to_complex()
        return Number(cmath.exp(e * cmath.log(b)), DOUBLE_PREC)
    with mpmath.workprec(prec):
        b = _to_mpc(base.value, prec)
        e = _to_mpc(exponent.value, prec)
        return Number(mpmath.exp(e * mpmath.log(b)), prec)


def to_float(x: NumberLike, precision: int = DOUBLE_PREC) -> Number:
    """Round x to a complex float at the given binary precision."""
    x = Number.of(x)
    if precision <= DOUBLE_PREC:
        v = x.value
        if isinstance(v, Fraction):
            return Number(complex(float(v), 0.0), DOUBLE_PREC)
        if isinstance(v, complex):
            return x
        return Number(x.to_complex(), DOUBLE_PREC)
    return Number(_to_mpc(x.value, precision), precision)


def _exact_integer_root(n: int, d: int):
    """The exact d-th root of a nonnegative integer, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    x = 1 << -((-n.bit_length()) // d)  # upper seed: 2^ceil(bits/d)
    while True:  # integer Newton descent
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    return x if x ** d == n else None


def exact_root_pow(base: Fraction, e: Fraction) -> Fraction:
    """base ** e staying in exact rationals, extracting the needed root.

    Requires base > 0 when e is not an integer, and the e.denominator-th root
    of base to be rational; raises ExactModeError otherwise.
    """
    base = Fraction(base)
    e = Fraction(e)
    if e.denominator == 1:
        if base == 0 and e <= 0:
            raise ValueError("zero base with non-positive exponent")
        return base ** e.numerator
    if base <= 0:
        raise ExactModeError(
            f"fractional power of non-positive exact base {base}")
    d = e.denominator
    num = _exact_integer_root(base.numerator, d)
    den = _exact_integer_root(base.denominator, d)
    if num is None or den is None:
        raise ExactModeError(
            f"exact {d}-th root of {base} does not exist; use float mode")
    return Fraction(num, den) ** e.numerator


class QParam:
    """The deformation parameter q with 0 < |q| < 1.

    The mode (exact or float) is carried by the wrapped Number: exact q is a
    real rational, float q may be complex.
    """

    __slots__ = ("_value",)

    def __init__(self, value: NumberLike):
        v = Number.of(value)
        if v.is_exact:
            f = v.fraction
            if not (0 < abs(f) < 1):
                raise ValueError(f"q must satisfy 0 < |q| < 1, got {f}")
        else:
            m = v.modulus()
            if not (0.0 < m < 1.0):
                raise ValueError(f"q must satisfy 0 < |q| < 1, got modulus {m}")
        object.__setattr__(self, "_value", v)

    def __setattr__(self, name, value):
        raise AttributeError("QParam is immutable")

    @classmethod
    def of(cls, v) -> "QParam":
        return v if isinstance(v, QParam) else cls(v)

    @property
    def value(self) -> Number:
        return self._value

    @property
    def mode(self) -> str:
        return "exact" if self._value.is_exact else "float"

    @property
    def is_exact(self) -> bool:
        return self._value.is_exact

    def to_complex(self) -> complex:
        return self._value.to_complex()

    def __eq__(self, other):
        if isinstance(other, QParam):
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(("QParam", self._value))

    def __repr__(self):
        return f"QParam({self._value!r})"
