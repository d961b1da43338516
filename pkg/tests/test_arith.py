from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from qodometer.arith import (
    Dyadic,
    format_rational,
    int_floor,
    parse_dyadic,
    parse_rational,
    pow2_floor_exp,
)


@pytest.mark.parametrize("x, n", [(0, 0), (Fraction(3, 2), 1), (Fraction(5, 3), 1), (Fraction(-1, 2), -1)])
def test_int_floor(x, n):
    assert int_floor(x) == n


@pytest.mark.parametrize("x, k", [(1, 0), (Fraction(7, 2), 1), (8, 3), (Fraction(15, 2), 2), (Fraction(2**70, 3), 68)])
def test_pow2_floor_exp(x, k):
    assert pow2_floor_exp(x) == k


def test_pow2_floor_exp_rejects_small():
    with pytest.raises(ValueError):
        pow2_floor_exp(Fraction(1, 2))


@given(st.integers(1, 10**30), st.integers(1, 10**30))
def test_pow2_floor_exp_brackets(p, q):
    x = Fraction(p, q)
    if x < 1:
        x = 1 / x
    k = pow2_floor_exp(x)
    assert 2**k <= x < 2 ** (k + 1)


@given(st.fractions())
def test_int_floor_brackets(x):
    n = int_floor(x)
    assert n <= x < n + 1


def test_dyadic_normal_form():
    assert Dyadic(4, 3) == Dyadic(1, 1)
    assert (Dyadic(4, 3).num, Dyadic(4, 3).exp) == (1, 1)
    assert (Dyadic(0, 5).num, Dyadic(0, 5).exp) == (0, 0)
    assert Dyadic(3, 3) == Fraction(3, 8)
    assert hash(Dyadic(6, 4)) == hash(Fraction(3, 8))


@given(st.integers(0, 2**40), st.integers(0, 40))
def test_dyadic_round_trip(j, k):
    d = Dyadic(j, k)
    assert Dyadic.from_rational(d.to_rational()) == d
    assert d.to_rational() == Fraction(j, 2**k)


def test_dyadic_rejects_non_dyadic():
    with pytest.raises(ValueError):
        Dyadic.from_rational(Fraction(1, 3))


def test_dyadic_bits():
    assert Dyadic(3, 3).bits() == "011"
    assert Dyadic(0).bits() == ""
    assert Dyadic.from_bits("0110") == Dyadic(3, 3)
    with pytest.raises(ValueError):
        Dyadic(1, 0).bits()


def test_text_forms():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(" 7 ") == 7
    assert parse_rational("3/2^3") == Fraction(3, 8)
    assert parse_rational("0.011") == Fraction(3, 8)
    assert parse_dyadic("5/2^3") == Dyadic(5, 3)
    assert parse_dyadic("0.1") == Dyadic(1, 1)
    assert parse_dyadic("3/8") == Dyadic(3, 3)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(2, 6)) == "1/3"
    assert str(Dyadic(3, 3)) == "3/2^3"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("x")
