import math

import pytest
from hypothesis import strategies as st

from argand.directed_line import DirectedLine
from argand.sampling import make_rng


def lines(bound=10.0, nonzero=False):
    # Tiny components snap to 0 so products stay clear of underflow.
    comp = st.floats(min_value=-bound, max_value=bound, allow_nan=False, allow_infinity=False)
    comp = comp.map(lambda x: 0.0 if abs(x) < 1e-100 else x)
    s = st.builds(DirectedLine, comp, comp)
    if nonzero:
        s = s.filter(lambda v: v.re != 0.0 or v.im != 0.0)
    return s


def close(u, v, tol):
    return math.hypot(u.re - v.re, u.im - v.im) <= tol


@pytest.fixture
def rng():
    return make_rng(20240601)


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE = []


def record_criterion(name, passed, detail=""):
    ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
