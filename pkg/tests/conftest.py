import sys
from fractions import Fraction

import pytest
from hypothesis import settings

from qumbral.qcore import QContext

settings.register_profile("qumbral", max_examples=40, deadline=None)
settings.load_profile("qumbral")

GRID = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(9, 10), Fraction(1))


@pytest.fixture(params=GRID, ids=lambda q: f"q={q}")
def ctx(request):
    return QContext(request.param)


@pytest.fixture
def half():
    return QContext(Fraction(1, 2))


@pytest.fixture
def classical():
    return QContext(1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[k])
