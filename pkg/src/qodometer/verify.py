"""Exhaustive identity checks over Farey fractions, dyadics and block codes.

Each family checks one identity ``lhs(case) == rhs(case)`` over a finite
case list and stops at the first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable

from .arith import Dyadic
from .enumeration import (
    calkin_wilf_oracle,
    enum_dyadic,
    enum_positive,
    enum_unit,
    index_of_unit,
)
from .expansions import (
    BinaryWord,
    BlockSequence,
    bcf_eval,
    bcf_expand,
    bcf_shift,
    bcf_to_cf,
    binary_expand,
    blocks_decode,
    blocks_encode,
    cf_eval,
    cf_expand,
    cf_shift,
    cf_to_bcf,
    shift_h,
)
from .maps import (
    backward_farey_J,
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
    r2_branch,
    renyi_branch,
    renyi_R,
)
from .odometer import odometer_D, odometer_Dtilde, odometric_substitution_O
from .qmark import qmark, qmark_bcf, qmark_bcf_series, qmark_denjoy, qmark_inverse, qmark_mediant

SUITES = ("action", "conjugacy", "qmark", "jump", "measure", "odometer-cover", "enumeration")


def farey(bound: int, include_zero=False, include_one=False) -> list[Fraction]:
    """Reduced p/q with q <= bound in (0,1), optionally with the endpoints."""
    out = [Fraction(0)] if include_zero else []
    for q in range(2, bound + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
    if include_one:
        out.append(Fraction(1))
    return out


def dyadics(level: int, include_one=False) -> list[Dyadic]:
    """All j/2^k in [0,1) with k <= level, each listed once."""
    out = [Dyadic(0)]
    for k in range(1, level + 1):
        out.extend(Dyadic(j, k) for j in range(1, 1 << k, 2))
    if include_one:
        out.append(Dyadic(1))
    return out


def block_family(max_len=16, max_index=8, exhaustive_len=4, samples=2000, seed=0) -> list[BlockSequence]:
    """Every block sequence of length <= exhaustive_len, plus seeded random longer ones."""
    out = set()
    for n in range(exhaustive_len + 1):
        for t in itertools.product(range(max_index + 1), repeat=n):
            out.add(BlockSequence(t))
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(exhaustive_len + 1, max_len)
        out.add(BlockSequence(tuple(rng.randint(0, max_index) for _ in range(n))))
    return sorted(out, key=lambda s: (len(s.blocks), s.blocks))


@dataclass
class Failure:
    case: object
    lhs: object
    rhs: object


@dataclass
class FamilyResult:
    suite: str
    name: str
    checked: int = 0
    failure: Failure | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def check(suite: str, name: str, cases: Iterable, lhs: Callable, rhs: Callable) -> FamilyResult:
    res = FamilyResult(suite, name)
    for case in cases:
        left, right = lhs(case), rhs(case)
        res.checked += 1
        if left != right:
            res.failure = Failure(case, left, right)
            break
    return res


def _d2_tiling(max_n: int) -> tuple[bool, str]:
    pieces = []
    for n in range(1, max_n + 1):
        lo, hi = 1 - Fraction(2, 1 << n), 1 - Fraction(1, 1 << n)
        a = odometer_D2(lo)
        b = a + (hi - lo)  # D2 is a translation on I_n
        if b - a != Fraction(1, 1 << n):
            return False, f"I_{n} image has length {b - a}"
        pieces.append((a, b))
    pieces.sort()
    for (a1, b1), (a2, b2) in zip(pieces, pieces[1:]):
        if b1 != a2:
            return False, f"gap or overlap between {b1} and {a2}"
    if pieces[0][0] != Fraction(1, 1 << max_n) or pieces[-1][1] != 1:
        return False, f"images span [{pieces[0][0]}, {pieces[-1][1]})"
    return True, ""


def run_suite(suite: str, bound: int) -> list[FamilyResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return _RUNNERS[suite](bound)


def _action(bound):
    xs = farey(bound)
    return [
        check("action", "theorem-action", xs,
              lambda x: bcf_eval(odometric_substitution_O(bcf_expand(x))), newman_T),
        check("action", "T-via-renyi", xs,
              newman_T, lambda x: 1 / (bcf_expand(x).head[0] - renyi_R(x))),
        check("action", "T=FoF", xs, newman_T, lambda x: newman_F(newman_F(x))),
        check("action", "cf-to-bcf", xs, lambda x: cf_to_bcf(cf_expand(x)), bcf_expand),
        check("action", "bcf-to-cf", xs, lambda x: bcf_to_cf(bcf_expand(x)), cf_expand),
        check("action", "bcf-round-trip", xs, lambda x: bcf_eval(bcf_expand(x)), lambda x: x),
        check("action", "cf-round-trip", xs, lambda x: cf_eval(cf_expand(x)), lambda x: x),
        check("action", "renyi-shift", xs, lambda x: bcf_shift(bcf_expand(x)), lambda x: bcf_expand(renyi_R(x))),
        check("action", "gauss-shift", xs, lambda x: cf_shift(cf_expand(x)), lambda x: cf_expand(gauss_G(x))),
    ]


def _conjugacy(bound):
    xs = farey(bound, include_zero=True)
    blocks = block_family()
    level = min(bound, 16)
    return [
        check("conjugacy", "?oT=D2o?", xs, lambda x: qmark_bcf(newman_T(x)), lambda x: Dyadic.from_rational(odometer_D2(qmark_bcf(x)))),
        check("conjugacy", "?oJ=Bo?", xs + [Fraction(1)],
              lambda x: qmark(backward_farey_J(x)),
              lambda x: Dyadic.from_rational(doubling_B(qmark(x).to_rational()))),
        check("conjugacy", "Dtilde=etaoDoeta^-1", blocks,
              odometer_Dtilde, lambda s: blocks_encode(odometer_D(blocks_decode(s)))),
        check("conjugacy", "Ooh=hoDtilde", blocks,
              lambda s: odometric_substitution_O(shift_h(s)), lambda s: shift_h(odometer_Dtilde(s))),
        check("conjugacy", "D-vs-D2", dyadics(level),
              lambda d: binary_expand(odometer_D2(d.to_rational())), lambda d: odometer_D(binary_expand(d))),
    ]


def _qmark(bound):
    xs = farey(bound)
    unit = farey(bound, include_zero=True)
    closed = farey(bound, include_zero=True, include_one=True)
    return [
        check("qmark", "mediant=denjoy", xs, qmark_mediant, qmark_denjoy),
        check("qmark", "denjoy=bcf", xs, qmark_denjoy, qmark_bcf),
        check("qmark", "series=word", unit, qmark_bcf_series, qmark_bcf),
        check("qmark", "inverse-of-qmark", unit, lambda x: qmark_inverse(qmark_bcf(x)), lambda x: x),
        check("qmark", "qmark-of-inverse", dyadics(min(bound, 14)), lambda d: qmark_bcf(qmark_inverse(d)), lambda d: d),
        check("qmark", "?(x/(x+1))=?(x)/2", closed,
              lambda x: qmark(x / (x + 1)).to_rational(), lambda x: qmark(x).to_rational() / 2),
        check("qmark", "?(1-x)=1-?(x)", closed,
              lambda x: qmark(1 - x).to_rational(), lambda x: 1 - qmark(x).to_rational()),
    ]


def _jump(bound):
    # branch endpoints need no exclusion: both sides agree there as well
    xs = farey(bound, include_zero=True)
    return [
        check("jump", "R=J^tau", xs, renyi_R, lambda x: iterate(backward_farey_J, x, hitting_tau(x))),
        check("jump", "R2=B^tauB", xs, linear_renyi_R2, lambda x: iterate(doubling_B, x, hitting_tauB(x))),
        check("jump", "tauB-literal", xs, hitting_tauB, hitting_tauB_literal),
        check("jump", "renyi-branch", xs, renyi_R, lambda x: renyi_branch(hitting_tau(x), x)),
        check("jump", "J(P_n+1)=P_n", range(1, 65),
              lambda n: backward_farey_J(Fraction(n, n + 1)), lambda n: Fraction(n - 1, n)),
    ]


def _measure(bound):
    tiling_ok, why = _d2_tiling(32)
    tiling = FamilyResult("measure", "D2-images-tile", checked=32)
    if not tiling_ok:
        tiling.failure = Failure("n <= 32", why, "tiling of [2^-32, 1)")

    def r2_branch_shape(n):
        lo, hi = 1 - Fraction(2, 1 << n), 1 - Fraction(1, 1 << n)
        slope = (r2_branch(n, hi) - r2_branch(n, lo)) / (hi - lo)
        return (linear_renyi_R2(lo), r2_branch(n, lo), r2_branch(n, hi), slope)

    grid = sorted(farey(bound, include_zero=True, include_one=True))
    left = [x for x in grid if x < Fraction(1, 2)]
    right = [x for x in grid if x >= Fraction(1, 2)]
    pairs = list(zip(left, left[1:])) + list(zip(right, right[1:]))
    # G(1/2) = 0 breaks J = 1 - G at the left end of [1/2, 1]
    halves = [x for x in grid if x > Fraction(1, 2)]
    return [
        tiling,
        check("measure", "R2-full-branch", range(1, 33), r2_branch_shape, lambda n: (0, 0, 1, 1 << n)),
        check("measure", "J-increasing", pairs,
              lambda p: backward_farey_J(p[0]) < backward_farey_J(p[1]), lambda p: True),
        check("measure", "J-fixed-ends", [Fraction(0), Fraction(1)], backward_farey_J, lambda x: x),
        check("measure", "J=1-G", halves, backward_farey_J, lambda x: 1 - gauss_G(x)),
    ]


def cover_seeds(count=10, length=20, seed=12345) -> list[BinaryWord]:
    rng = random.Random(seed)
    return [BinaryWord(tuple(rng.randint(0, 1) for _ in range(length))) for _ in range(count)]


def orbit_prefixes(w: BinaryWord, n: int) -> list[tuple]:
    """First n bits of D^k(w) for 0 <= k < 2**n."""
    out = []
    for _ in range(1 << n):
        out.append((w.bits + (0,) * n)[:n])
        w = odometer_D(w)
    return out


def d2_orbit(count: int) -> list[Dyadic]:
    x, out = Fraction(0), []
    for _ in range(count):
        out.append(Dyadic.from_rational(x))
        x = odometer_D2(x)
    return out


def _odometer_cover(bound):
    top = min(bound, 12)
    cases = [(n, w) for n in range(1, top + 1) for w in cover_seeds()]
    every_word = {n: sorted(itertools.product((0, 1), repeat=n)) for n in range(1, top + 1)}
    levels = range(1, top + 1)
    return [
        check("odometer-cover", "D-orbit-cover", cases,
              lambda c: sorted(orbit_prefixes(c[1], c[0])), lambda c: every_word[c[0]]),
        check("odometer-cover", "D2-orbit-levels", levels,
              lambda k: set(d2_orbit(1 << k)),
              lambda k: {Dyadic(j, k) for j in range(1 << k)}),
    ]


def _enumeration(bound):
    return [
        check("enumeration", "newman=calkin-wilf", range(10001), enum_positive, calkin_wilf_oracle),
        check("enumeration", "?(T^n 0)=D2^n 0", range(4097), lambda n: qmark_bcf(enum_unit(n)), enum_dyadic),
        check("enumeration", "bit-reversal=D2-orbit", list(enumerate(d2_orbit(4097))),
              lambda c: enum_dyadic(c[0]), lambda c: c[1]),
        check("enumeration", "index-round-trip", range(4097), lambda n: index_of_unit(enum_unit(n)), lambda n: n),
        check("enumeration", "T^n=F^2n", range(4097), enum_unit, lambda n: enum_positive(2 * n)),
        check("enumeration", "unit-duplicate-free", [4097],
              lambda n: len({enum_unit(i) for i in range(n)}), lambda n: n),
    ]


_RUNNERS = {
    "action": _action,
    "conjugacy": _conjugacy,
    "qmark": _qmark,
    "jump": _jump,
    "measure": _measure,
    "odometer-cover": _odometer_cover,
    "enumeration": _enumeration,
}
