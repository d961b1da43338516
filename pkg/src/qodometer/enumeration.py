"""Counting the rationals: orbits of 0 under F, T and D2, plus a Calkin-Wilf tree oracle.

Index 0 is the orbit seed 0, so ``enum_unit(n)`` for n >= 1 runs through
Q ∩ (0,1) and ``enum_positive(n)`` for n >= 1 runs through the positive rationals.
"""

from __future__ import annotations

import threading
from collections import deque
from fractions import Fraction
from typing import Callable, Iterator

from .arith import Dyadic, as_rational
from .maps import newman_F, newman_T, odometer_D2
from .qmark import qmark_bcf

__all__ = [
    "enum_positive",
    "enum_unit",
    "enum_dyadic",
    "enum_dyadic_orbit",
    "iter_orbit",
    "calkin_wilf_oracle",
    "calkin_wilf_bfs",
    "index_of_unit",
    "bit_reverse",
]


def iter_orbit(f: Callable, x=Fraction(0)) -> Iterator:
    while True:
        yield x
        x = f(x)


class _OrbitTable:
    """Memoized orbit of 0; extended on demand and shared by all callers."""

    def __init__(self, f, seed):
        self._f = f
        self._points = [seed]
        self._lock = threading.Lock()

    def __getitem__(self, n: int):
        if n < 0:
            raise ValueError("enumeration index must be >= 0")
        pts = self._points
        if n >= len(pts):
            with self._lock:
                f = self._f
                x = pts[-1]
                while len(pts) <= n:
                    x = f(x)
                    pts.append(x)
        return pts[n]


_F_ORBIT = _OrbitTable(newman_F, Fraction(0))
_T_ORBIT = _OrbitTable(newman_T, Fraction(0))


def enum_positive(n: int) -> Fraction:
    """F^n(0)."""
    return _F_ORBIT[n]


def enum_unit(n: int) -> Fraction:
    """T^n(0)."""
    return _T_ORBIT[n]


def bit_reverse(n: int) -> Dyadic:
    """Read the binary digits of n backwards after the point: 6 = 110 -> 0.011."""
    if n < 0:
        raise ValueError("enumeration index must be >= 0")
    if n == 0:
        return Dyadic(0)
    k = n.bit_length()
    return Dyadic(int(format(n, "b")[::-1], 2), k)


def enum_dyadic(n: int) -> Dyadic:
    """D2^n(0) through the bit-reversal closed form."""
    return bit_reverse(n)


def enum_dyadic_orbit(n: int) -> Dyadic:
    """D2^n(0) by iterating the interval odometer."""
    if n < 0:
        raise ValueError("enumeration index must be >= 0")
    x = Fraction(0)
    for _ in range(n):
        x = odometer_D2(x)
    return Dyadic.from_rational(x)


def calkin_wilf_bfs() -> Iterator[Fraction]:
    """Breadth-first walk of the Calkin-Wilf tree, preceded by 0 at index 0."""
    yield Fraction(0)
    queue = deque([(1, 1)])
    while True:
        a, b = queue.popleft()
        yield Fraction(a, b)
        queue.append((a, a + b))
        queue.append((a + b, b))


def calkin_wilf_oracle(n: int) -> Fraction:
    """n-th node of the Calkin-Wilf tree in breadth-first order (root = 1), 0 for n = 0.

    The binary digits of n after the leading 1 spell the path from the root:
    0 is the left child a/(a+b), 1 the right child (a+b)/b.
    """
    if n < 0:
        raise ValueError("enumeration index must be >= 0")
    if n == 0:
        return Fraction(0)
    a, b = 1, 1
    for bit in format(n, "b")[1:]:
        if bit == "0":
            b = a + b
        else:
            a = a + b
    return Fraction(a, b)


def index_of_unit(x) -> int:
    """The n with T^n(0) = x, read off ?(x) = j/2^k by reversing its k-bit word."""
    x = as_rational(x)
    if not 0 <= x < 1:
        raise ValueError(f"index_of_unit needs 0 <= x < 1, got {x}")
    d = qmark_bcf(x)
    if d.num == 0:
        return 0
    word = format(d.num, "b").zfill(d.exp)
    return int(word[::-1], 2)
