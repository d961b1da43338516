"""Interval maps on exact rationals, their hitting times and branch formulas.

Partition conventions: I_n = [1 - 2**(1-n), 1 - 2**-n) and
P_n = [(n-1)/n, n/(n+1)) are closed on the left and open on the right; the
point 1/2 belongs to the right branch of B and J.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .arith import as_rational, int_floor, pow2_floor_exp

__all__ = [
    "MapId",
    "newman_F",
    "newman_T",
    "renyi_R",
    "gauss_G",
    "doubling_B",
    "linear_renyi_R2",
    "backward_farey_J",
    "odometer_D2",
    "hitting_tau",
    "hitting_tauB",
    "hitting_tauB_literal",
    "renyi_branch",
    "r2_branch",
    "d2_branch_index",
    "apply_map",
    "iterate",
    "orbit",
]

HALF = Fraction(1, 2)


def _check(x, lo, hi, lo_closed=True, hi_closed=False, name="map"):
    x = as_rational(x)
    ok_lo = x >= lo if lo_closed else x > lo
    ok_hi = x <= hi if hi_closed else x < hi
    if not (ok_lo and ok_hi):
        left = "[" if lo_closed else "("
        right = "]" if hi_closed else ")"
        raise ValueError(f"{name}: {x} outside {left}{lo},{hi}{right}")
    return x


def newman_F(x) -> Fraction:
    """F(x) = 1 / (2[x] - x + 1) on x >= 0."""
    x = as_rational(x)
    if x < 0:
        raise ValueError(f"F: {x} is negative")
    return 1 / (2 * int_floor(x) - x + 1)


def newman_T(x) -> Fraction:
    """First return map of F to [0,1)."""
    x = _check(x, 0, 1, name="T")
    y = 1 / (1 - x)
    return 1 / (2 * int_floor(y) + 1 - y)


def renyi_R(x) -> Fraction:
    x = _check(x, 0, 1, name="R")
    p, q = x.numerator, x.denominator
    d = q - p
    return Fraction(q % d, d)


def gauss_G(x) -> Fraction:
    x = _check(x, 0, 1, lo_closed=False, hi_closed=True, name="G")
    p, q = x.numerator, x.denominator
    return Fraction(q % p, p)


def doubling_B(x) -> Fraction:
    x = _check(x, 0, 1, hi_closed=True, name="B")
    return 2 * x if x < HALF else 2 * x - 1


def linear_renyi_R2(x) -> Fraction:
    """R2(x) = 2 - 2 [1/(1-x)]_2 / (1/(1-x))."""
    x = _check(x, 0, 1, name="R2")
    k = pow2_floor_exp(1 / (1 - x))
    return 2 - 2 * (1 << k) * (1 - x)


def backward_farey_J(x) -> Fraction:
    x = _check(x, 0, 1, hi_closed=True, name="J")
    if x < HALF:
        return x / (1 - x)
    return (2 * x - 1) / x


def d2_branch_index(x) -> int:
    """The n with x in I_n."""
    x = _check(x, 0, 1, name="D2")
    return pow2_floor_exp(1 / (1 - x)) + 1


def odometer_D2(x) -> Fraction:
    """Interval odometer: D2(x) = x + 3/2**n - 1 on I_n."""
    x = as_rational(x)
    n = d2_branch_index(x)
    return x + Fraction(3, 1 << n) - 1


def hitting_tau(x) -> int:
    """First hitting time of P_1 under J, equal to [1/(1-x)]."""
    x = _check(x, 0, 1, name="tau")
    return int_floor(1 / (1 - x))


def hitting_tauB(x) -> int:
    """First hitting time of [0,1/2) under B, read off the leading block of x."""
    x = _check(x, 0, 1, name="tauB")
    return pow2_floor_exp(1 / (1 - x)) + 1


def hitting_tauB_literal(x) -> int:
    """1 + min{n >= 0 : B^n(x) in [0,1/2)}, by iterating B."""
    x = _check(x, 0, 1, name="tauB")
    n = 0
    while x >= HALF:
        x = doubling_B(x)
        n += 1
    return n + 1


def renyi_branch(n: int, x) -> Fraction:
    """The n-th branch (n x - (n-1)) / (1 - x) of R, valid on P_n."""
    if n < 1:
        raise ValueError("branch index starts at 1")
    x = _check(x, Fraction(n - 1, n), Fraction(n, n + 1), name=f"R|P_{n}")
    return (n * x - (n - 1)) / (1 - x)


def r2_branch(n: int, x) -> Fraction:
    """Affine branch 2**n x - (2**n - 2) of R2 on I_n; accepts the closure of I_n."""
    if n < 1:
        raise ValueError("branch index starts at 1")
    x = as_rational(x)
    lo, hi = 1 - Fraction(2, 1 << n), 1 - Fraction(1, 1 << n)
    if not lo <= x <= hi:
        raise ValueError(f"R2|I_{n}: {x} outside [{lo},{hi}]")
    return (1 << n) * x - ((1 << n) - 2)


class MapId(enum.Enum):
    F = "F"
    T = "T"
    R = "R"
    G = "G"
    B = "B"
    R2 = "R2"
    J = "J"
    D2 = "D2"

    @classmethod
    def parse(cls, name) -> MapId:
        if isinstance(name, MapId):
            return name
        try:
            return cls(str(name).upper())
        except ValueError:
            raise ValueError(f"unknown map {name!r}; choose from {', '.join(m.value for m in cls)}") from None

    @property
    def func(self):
        return _MAPS[self]

    def in_domain(self, x) -> bool:
        x = as_rational(x)
        if self is MapId.F:
            return x >= 0
        if self is MapId.G:
            return 0 < x <= 1
        if self in (MapId.B, MapId.J):
            return 0 <= x <= 1
        return 0 <= x < 1


_MAPS = {
    MapId.F: newman_F,
    MapId.T: newman_T,
    MapId.R: renyi_R,
    MapId.G: gauss_G,
    MapId.B: doubling_B,
    MapId.R2: linear_renyi_R2,
    MapId.J: backward_farey_J,
    MapId.D2: odometer_D2,
}


def apply_map(m, x) -> Fraction:
    return MapId.parse(m).func(x)


def iterate(f, x, n: int) -> Fraction:
    for _ in range(n):
        x = f(x)
    return x


class OrbitDomainError(ValueError):
    def __init__(self, m, step, value, cause):
        super().__init__(f"{m.value} orbit left the domain at step {step} (value {value}): {cause}")
        self.step = step
        self.value = value


def orbit(m, x, n: int) -> list[Fraction]:
    """[x, m(x), ..., m^n(x)]."""
    m = MapId.parse(m)
    x = as_rational(x)
    out = [x]
    f = m.func
    for step in range(n):
        try:
            x = f(x)
        except ValueError as exc:
            raise OrbitDomainError(m, step, x, exc) from exc
        out.append(x)
    return out
