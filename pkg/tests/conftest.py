from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def unit_rationals(draw, max_den=10**6, open_left=False):
    """Rationals in [0,1) (or (0,1) with open_left)."""
    q = draw(st.integers(min_value=2 if open_left else 1, max_value=max_den))
    p = draw(st.integers(min_value=1 if open_left else 0, max_value=q - 1))
    return Fraction(p, q)


@st.composite
def dyadic_unit(draw, max_level=40):
    from qodometer.arith import Dyadic

    k = draw(st.integers(min_value=0, max_value=max_level))
    j = draw(st.integers(min_value=0, max_value=max(0, (1 << k) - 1)))
    return Dyadic(j, k)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
