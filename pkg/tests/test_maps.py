import math
from fractions import Fraction

import pytest
from hypothesis import given, assume

from qodometer.expansions import bcf_expand
from qodometer.maps import (
    MapId,
    OrbitDomainError,
    backward_farey_J,
    d2_branch_index,
    doubling_B,
    gauss_G,
    hitting_tau,
    hitting_tauB,
    hitting_tauB_literal,
    iterate,
    linear_renyi_R2,
    newman_F,
    newman_T,
    odometer_D2,
    orbit,
    r2_branch,
    renyi_branch,
    renyi_R,
)

from conftest import unit_rationals

F = Fraction


def literal_T(x):
    y = 1 / (1 - x)
    return 1 / (2 * math.floor(y) + 1 - y)


def literal_R(x):
    y = 1 / (1 - x)
    return y - math.floor(y)


def scan_I(x):
    """n with x in I_n, by walking the partition."""
    n = 1
    while not (1 - F(2, 2**n) <= x < 1 - F(1, 2**n)):
        n += 1
    return n


@pytest.mark.parametrize("x, y", [(F(0), F(1)), (F(1, 2), F(2)), (F(3, 2), F(2, 3))])
def test_newman_F(x, y):
    assert newman_F(x) == y


@pytest.mark.parametrize("x, y", [(F(0), F(1, 2)), (F(1, 2), F(1, 3)), (F(2, 3), F(1, 4)), (F(3, 4), F(1, 5))])
def test_newman_T(x, y):
    assert newman_T(x) == y == literal_T(x)


@pytest.mark.parametrize("x, y", [(F(0), F(0)), (F(1, 2), F(0)), (F(1, 3), F(1, 2))])
def test_renyi_R(x, y):
    assert renyi_R(x) == y == literal_R(x)


@pytest.mark.parametrize("x, y", [(F(1), F(0)), (F(2, 5), F(1, 2)), (F(1, 3), F(0))])
def test_gauss_G(x, y):
    assert gauss_G(x) == y


@pytest.mark.parametrize("x, y", [(F(0), F(0)), (F(1, 2), F(0)), (F(3, 8), F(3, 4)), (F(1), F(1))])
def test_doubling_B(x, y):
    assert doubling_B(x) == y


# 5/8: 1/(1-x) = 8/3, [8/3]_2 = 2, so R2 = 2 - 2*2*(3/8) = 1/2; also B(B(5/8)) = 1/2
@pytest.mark.parametrize("x, y", [(F(0), F(0)), (F(3, 4), F(0)), (F(5, 8), F(1, 2))])
def test_linear_renyi_R2(x, y):
    assert linear_renyi_R2(x) == y == iterate(doubling_B, x, hitting_tauB_literal(x))


@pytest.mark.parametrize("x, y", [(F(0), F(0)), (F(1, 3), F(1, 2)), (F(3, 5), F(1, 3)), (F(1), F(1))])
def test_backward_farey_J(x, y):
    assert backward_farey_J(x) == y


@pytest.mark.parametrize("x, y", [(F(0), F(1, 2)), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 8))])
def test_odometer_D2(x, y):
    assert odometer_D2(x) == y


@pytest.mark.parametrize("x, n", [(F(0), 1), (F(2, 3), 3), (F(3, 5), 2)])
def test_hitting_tau(x, n):
    assert hitting_tau(x) == n


@pytest.mark.parametrize("x, n", [(F(0), 1), (F(3, 4), 3), (F(5, 8), 2)])
def test_hitting_tauB(x, n):
    assert hitting_tauB(x) == n == hitting_tauB_literal(x)


@pytest.mark.parametrize("n, x, y", [(1, F(0), F(0)), (2, F(3, 5), F(1, 2)), (3, F(2, 3), F(0))])
def test_renyi_branch(n, x, y):
    assert renyi_branch(n, x) == y


def test_renyi_branch_rejects_outside():
    with pytest.raises(ValueError):
        renyi_branch(2, F(1, 3))
    with pytest.raises(ValueError):
        renyi_branch(2, F(2, 3))


@pytest.mark.parametrize(
    "m, x, n, pts",
    [
        ("T", F(0), 3, [F(0), F(1, 2), F(1, 3), F(2, 3)]),
        ("D2", F(0), 3, [F(0), F(1, 2), F(1, 4), F(3, 4)]),
        ("R", F(0), 5, [F(0)] * 6),
        ("r", F(1, 3), 2, [F(1, 3), F(1, 2), F(0)]),
    ],
)
def test_orbit(m, x, n, pts):
    assert orbit(m, x, n) == pts


def test_orbit_domain_error_reports_step():
    # G(1/2) = 0 is outside the domain of G
    with pytest.raises(OrbitDomainError) as info:
        orbit("G", F(1, 2), 3)
    assert info.value.step == 1 and info.value.value == 0


def test_domain_checks():
    for f, bad in [(newman_T, F(1)), (renyi_R, F(-1, 3)), (gauss_G, F(0)), (gauss_G, F(3, 2)),
                   (doubling_B, F(3, 2)), (linear_renyi_R2, F(1)), (backward_farey_J, F(-1)),
                   (odometer_D2, F(1)), (newman_F, F(-1))]:
        with pytest.raises(ValueError):
            f(bad)


def test_map_ids():
    assert MapId.parse("d2") is MapId.D2
    assert MapId.parse("r2") is MapId.R2
    assert [m.value for m in MapId] == ["F", "T", "R", "G", "B", "R2", "J", "D2"]
    with pytest.raises(ValueError):
        MapId.parse("X")


@given(unit_rationals())
def test_T_is_F_squared(x):
    assert newman_T(x) == newman_F(newman_F(x)) == literal_T(x)


@given(unit_rationals())
def test_T_via_first_digit(x):
    a1 = bcf_expand(x).digits(1)[0]
    assert newman_T(x) == 1 / (a1 - renyi_R(x))


@given(unit_rationals())
def test_jump_identities(x):
    assert renyi_R(x) == literal_R(x)
    assert renyi_R(x) == iterate(backward_farey_J, x, hitting_tau(x))
    assert linear_renyi_R2(x) == iterate(doubling_B, x, hitting_tauB(x))
    assert hitting_tauB(x) == hitting_tauB_literal(x)
    assert renyi_R(x) == renyi_branch(hitting_tau(x), x)


@given(unit_rationals())
def test_d2_branch_index_matches_scan(x):
    n = d2_branch_index(x)
    assert n == scan_I(x)
    assert odometer_D2(x) == x + F(3, 2**n) - 1
    assert 0 <= odometer_D2(x) < 1
    assert linear_renyi_R2(x) == r2_branch(n, x)


@given(unit_rationals(), unit_rationals())
def test_J_increasing_on_each_branch(x, y):
    assume(x < y)
    half = F(1, 2)
    if y < half or x >= half:
        assert backward_farey_J(x) < backward_farey_J(y)


@given(unit_rationals(open_left=True))
def test_J_is_one_minus_G_right_of_half(x):
    assume(x > F(1, 2))
    assert backward_farey_J(x) == 1 - gauss_G(x)


def test_J_one_minus_G_fails_at_half():
    assert backward_farey_J(F(1, 2)) == 0
    assert 1 - gauss_G(F(1, 2)) == 1


def test_partition_descent():
    for n in range(1, 65):
        assert backward_farey_J(F(n, n + 1)) == F(n - 1, n)


def test_r2_full_branches():
    for n in range(1, 33):
        lo, hi = 1 - F(2, 2**n), 1 - F(1, 2**n)
        assert r2_branch(n, lo) == 0 == linear_renyi_R2(lo)
        assert r2_branch(n, hi) == 1
        mid = (lo + hi) / 2
        assert linear_renyi_R2(mid) == F(1, 2)


def test_d2_images_tile():
    from qodometer.verify import _d2_tiling

    assert _d2_tiling(32) == (True, "")
