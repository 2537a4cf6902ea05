import functools

import pytest

from cyclotomo import CycNum, FieldTag, enumerate_cross_ratio_set


@functools.lru_cache(maxsize=None)
def cset(n):
    return enumerate_cross_ratio_set(FieldTag(n))


@pytest.fixture
def cset_of():
    return cset


def sqrt3():
    # 2 cos(pi/6)
    return CycNum.zeta(12, 1) + CycNum.zeta(12, 11)


def q3(a, b=0):
    """a + b*sqrt(3) in Q(zeta_12)."""
    return CycNum.rational(12, a) + sqrt3() * b


ACCEPTANCE_LINES = []


def record(criterion, ok, detail=""):
    """Store one acceptance outcome; printed in the terminal summary."""
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
