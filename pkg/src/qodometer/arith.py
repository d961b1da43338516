"""Exact numbers: reduced rationals, dyadic rationals and the two floor operators."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

# Fraction already keeps num/den reduced with den > 0 and 0 == 0/1.
Rational = Fraction

__all__ = [
    "Rational",
    "Dyadic",
    "int_floor",
    "pow2_floor_exp",
    "parse_rational",
    "format_rational",
    "parse_dyadic",
    "as_rational",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Dyadic):
        return x.to_rational()
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def int_floor(x) -> int:
    """Integer part [x]: the unique n with n <= x < n + 1."""
    x = as_rational(x)
    return x.numerator // x.denominator


def pow2_floor_exp(x) -> int:
    """Exponent k of [x]_2, i.e. the unique k >= 0 with 2**k <= x < 2**(k+1).

    Uses integer comparisons only; ``x`` must be at least 1.
    """
    x = as_rational(x)
    p, q = x.numerator, x.denominator
    if p < q:
        raise ValueError(f"pow2_floor_exp needs x >= 1, got {x}")
    # floor(p/q) has the same binary floor-log as p/q since 2**k is an integer
    n = p // q
    return n.bit_length() - 1


@dataclass(frozen=True, order=False)
class Dyadic:
    """The number num / 2**exp, stored with odd num (or as 0/2^0)."""

    num: int
    exp: int = 0

    def __post_init__(self):
        num, exp = self.num, self.exp
        if exp < 0:
            raise ValueError("negative dyadic exponent")
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_rational(cls, x) -> Dyadic:
        x = as_rational(x)
        q = x.denominator
        if q & (q - 1):
            raise ValueError(f"{x} is not a dyadic rational")
        return cls(x.numerator, q.bit_length() - 1)

    @classmethod
    def from_bits(cls, bits) -> Dyadic:
        """Value of 0.b1b2...bm for a sequence of 0/1 digits."""
        bits = [int(b) for b in bits]
        m = len(bits)
        if m == 0:
            return cls(0, 0)
        return cls(int("".join(map(str, bits)), 2), m)

    def to_rational(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def bits(self) -> str:
        """Binary digits after the point, trailing zeros dropped (needs 0 <= d < 1)."""
        if not 0 <= self.num < (1 << self.exp) or (self.exp == 0 and self.num != 0):
            raise ValueError(f"{self} is not in [0,1)")
        if self.num == 0:
            return ""
        return format(self.num, "b").zfill(self.exp)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, (int, Fraction)):
            return self.to_rational() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_rational())

    def __lt__(self, other):
        return self.to_rational() < as_rational(other)

    def __str__(self):
        return f"{self.num}/2^{self.exp}"

    def __repr__(self):
        return f"Dyadic({self.num}, {self.exp})"


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DY_RE = re.compile(r"^\s*(\d+)\s*/\s*2\s*\^\s*(\d+)\s*$")
_BIN_RE = re.compile(r"^\s*0\.([01]*)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer. Also accepts ``j/2^k`` and ``0.bits``."""
    m = _RAT_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _DY_RE.match(text) or _BIN_RE.match(text):
        return parse_dyadic(text).to_rational()
    raise ValueError(f"cannot parse rational {text!r}")


def parse_dyadic(text: str) -> Dyadic:
    m = _DY_RE.match(text)
    if m:
        return Dyadic(int(m.group(1)), int(m.group(2)))
    m = _BIN_RE.match(text)
    if m:
        return Dyadic.from_bits(m.group(1))
    return Dyadic.from_rational(parse_rational(text))


def format_rational(x) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
