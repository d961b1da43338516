"""Minkowski's question-mark function on rationals, three ways, and its inverse on dyadics."""

from __future__ import annotations

from fractions import Fraction

from .arith import Dyadic, as_rational
from .expansions import (
    bcf_eval,
    bcf_expand,
    binary_expand,
    blocks_encode,
    cf_expand,
    shift_h,
)

__all__ = [
    "qmark_mediant",
    "qmark_denjoy",
    "qmark_bcf",
    "qmark_bcf_series",
    "qmark_inverse",
    "qmark",
    "ALGORITHMS",
]


def qmark_mediant(x) -> Dyadic:
    """Walk down the Farey tree from (0/1, 1/1); each mediant gets the average value."""
    x = as_rational(x)
    if not 0 <= x <= 1:
        raise ValueError(f"?: {x} outside [0,1]")
    p, q = x.numerator, x.denominator
    a, b, va = 0, 1, Fraction(0)
    c, d, vc = 1, 1, Fraction(1)
    if x == 0:
        return Dyadic(0)
    if x == 1:
        return Dyadic(1)
    while True:
        mp, mq = a + c, b + d
        vm = (va + vc) / 2
        if mp * q == p * mq:
            return Dyadic.from_rational(vm)
        if p * mq < mp * q:
            c, d, vc = mp, mq, vm
        else:
            a, b, va = mp, mq, vm


def qmark_denjoy(x) -> Dyadic:
    """2 * sum_n (-1)**(n+1) / 2**(m1 + ... + mn) over the continued fraction digits."""
    x = as_rational(x)
    if not 0 < x < 1:
        raise ValueError(f"Denjoy's formula needs 0 < x < 1, got {x}")
    digits = cf_expand(x).digits
    total = sum(digits)
    # scale every term to the common denominator 2**total
    acc = 0
    s = 0
    for n, m in enumerate(digits):
        s += m
        term = 1 << (total - s)
        acc += term if n % 2 == 0 else -term
    return Dyadic(2 * acc, total)


def qmark_bcf(x) -> Dyadic:
    """Binary word b_{a1-2} b_{a2-2} ... from the BCF digits; the 2-tail adds only zeros."""
    x = as_rational(x)
    if not 0 <= x < 1:
        raise ValueError(f"?: {x} outside [0,1)")
    bits = []
    for a in bcf_expand(x).head:
        bits.extend([1] * (a - 2))
        bits.append(0)
    return Dyadic.from_bits(bits)


def qmark_bcf_series(x) -> Dyadic:
    """1 - sum_j 2**-((a1 + ... + aj) - j) with the 2-tail summed in closed form."""
    x = as_rational(x)
    if not 0 <= x < 1:
        raise ValueError(f"?: {x} outside [0,1)")
    head = bcf_expand(x).head
    value = Fraction(1)
    e = 0
    for a in head:
        e += a - 1
        value -= Fraction(1, 1 << e)
    # beyond the head each digit is 2, so the remaining terms form a geometric
    # series with ratio 1/2 summing to 2**-e
    value -= Fraction(1, 1 << e)
    return Dyadic.from_rational(value)


def qmark_inverse(d) -> Fraction:
    """?^{-1} on dyadics in [0,1): bits -> blocks -> BCF digits (+2) -> rational."""
    if not isinstance(d, Dyadic):
        d = Dyadic.from_rational(as_rational(d))
    if not 0 <= d.to_rational() < 1:
        raise ValueError(f"?^-1: {d} outside [0,1)")
    return bcf_eval(shift_h(blocks_encode(binary_expand(d))))


ALGORITHMS = {
    "mediant": qmark_mediant,
    "denjoy": qmark_denjoy,
    "bcf": qmark_bcf,
}


def qmark(x, algo: str = "bcf") -> Dyadic:
    """?(x) on [0,1] with ?(0) = 0 and ?(1) = 1 fixed before dispatch."""
    x = as_rational(x)
    if not 0 <= x <= 1:
        raise ValueError(f"?: {x} outside [0,1]")
    if x == 0:
        return Dyadic(0)
    if x == 1:
        return Dyadic(1)
    try:
        func = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}") from None
    return func(x)
