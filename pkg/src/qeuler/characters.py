"""Dirichlet characters with odd conductor, given as explicit value tables,
plus the truncated convolutions that collapse r-fold character-twisted sums
into single-index series.
"""

from __future__ import annotations

import math
import re
from typing import Callable, Optional, Sequence

from .scalar import Number, NumberLike, ONE, ZERO

# Non-exact character values must be roots of unity to this tolerance.
_UNITY_TOL = 1e-9


class DirichletCharacter:
    """Completely multiplicative f-periodic map, zero off the units mod f.

    Immutable; construct through :func:`character_from_table`, which checks
    all invariants.  chi(m) for arbitrary m >= 0 is values[m mod f].
    """

    __slots__ = ("conductor", "values")

    def __init__(self, conductor: int, values: tuple):
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("DirichletCharacter is immutable")

    def __call__(self, m: int) -> Number:
        return self.values[m % self.conductor]

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 1

    @property
    def is_exact(self) -> bool:
        return all(v.is_exact for v in self.values)

    def __eq__(self, other):
        if isinstance(other, DirichletCharacter):
            return (self.conductor == other.conductor
                    and self.values == other.values)
        return NotImplemented

    def __hash__(self):
        return hash((self.conductor, self.values))

    def __repr__(self):
        vals = ",".join(str(v.value) for v in self.values)
        return f"DirichletCharacter(f={self.conductor}, values=[{vals}])"


def character_from_table(f: int, values: Sequence[NumberLike]) -> DirichletCharacter:
    """Build and validate a character from its value table of length f.

    Checks: f odd and positive; zero exactly off the units; values[1] = 1 for
    f > 1 (values[0] = 1 for f = 1); complete multiplicativity over all
    residue pairs; every nonzero value a root of unity (exactly +-1 in exact
    arithmetic, |v^phi - 1| small in float).
    """
    if f <= 0 or f % 2 == 0:
        raise ValueError(f"conductor must be a positive odd integer, got {f}")
    vals = tuple(Number.of(v) for v in values)
    if len(vals) != f:
        raise ValueError(f"value table must have length {f}, got {len(vals)}")

    if f == 1:
        if vals[0] != ONE:
            raise ValueError("the conductor-1 character must have values=[1]")
        return DirichletCharacter(1, vals)

    units = [a for a in range(f) if math.gcd(a, f) == 1]
    for a in range(f):
        if math.gcd(a, f) > 1:
            if not vals[a].is_zero():
                raise ValueError(f"nonzero value at non-unit residue {a}")
        elif vals[a].is_zero():
            raise ValueError(f"zero value at unit residue {a}")
    if vals[1] != ONE:
        raise ValueError("values[1] must be 1")
    for a in units:
        for b in units:
            if vals[(a * b) % f] != vals[a] * vals[b]:
                raise ValueError(
                    f"table is not multiplicative at ({a},{b})")
    phi = len(units)
    for a in units:
        v = vals[a]
        if v.is_exact:
            if v.fraction not in (1, -1):
                raise ValueError(
                    f"exact character value at residue {a} must be +1 or -1")
        else:
            w = complex(v) ** phi
            if abs(w - 1) > _UNITY_TOL:
                raise ValueError(
                    f"value at residue {a} is not a root of unity")
    return DirichletCharacter(f, vals)


def trivial_character() -> DirichletCharacter:
    return DirichletCharacter(1, (ONE,))


def character_value(chi: DirichletCharacter, m: int) -> Number:
    """chi(m) = values[m mod f] for m >= 0."""
    if m < 0:
        raise ValueError("character values are used only for m >= 0")
    return chi(m)


WeightDescriptor = Optional[Callable[[int], NumberLike]]


def character_convolution(chi: DirichletCharacter,
                          weights: Sequence[WeightDescriptor],
                          M: int) -> list[Number]:
    """Collapse an r-fold character-weighted sum to one index.

    Returns c[0..M] with c[m] = sum over m_1+...+m_r = m of
    prod_j w_j(m_j) chi(m_j).  Each descriptor supplies the per-coordinate
    factor multiplying chi(m); None means no extra factor.  Computed by r-1
    truncated Cauchy products, exact whenever the inputs are.
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    r = len(weights)
    if r < 1:
        raise ValueError("need at least one weight descriptor")

    def coord(j: int) -> list[Number]:
        w = weights[j]
        out = []
        for m in range(M + 1):
            cm = chi(m)
            if w is not None:
                cm = cm * Number.of(w(m))
            out.append(cm)
        return out

    acc = coord(0)
    for j in range(1, r):
        nxt = coord(j)
        acc = _cauchy(acc, nxt, M)
    return acc


def _cauchy(a: list[Number], b: list[Number], M: int) -> list[Number]:
    out = []
    for m in range(M + 1):
        s = ZERO
        for i in range(m + 1):
            if not a[i].is_zero() and not b[m - i].is_zero():
                s = s + a[i] * b[m - i]
        out.append(s)
    return out


_CHAR_SPEC = re.compile(r"^\s*f\s*=\s*(\d+)\s*;\s*values\s*=\s*(.+)\s*$")


def parse_character(spec: str) -> DirichletCharacter:
    """Parse the CLI character syntax, e.g. "f=3;values=0,1,-1".

    Values are exact rationals ("p/q" or integers) or "a+bi" float literals.
    """
    from .cli import parse_literal  # shared literal grammar

    m = _CHAR_SPEC.match(spec)
    if not m:
        raise ValueError(
            f'character spec must look like "f=3;values=0,1,-1", got {spec!r}')
    f = int(m.group(1))
    parts = [p.strip() for p in m.group(2).split(",")]
    vals = [parse_literal(p) for p in parts]
    return character_from_table(f, vals)
