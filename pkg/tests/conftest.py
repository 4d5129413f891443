import pytest

from coxfa.system import parse_system
from systems import FOUR_GEN, INF_DIHEDRAL, SIX_GEN, TRIANGLE_346

ACCEPTANCE = {}


@pytest.fixture
def t346():
    return parse_system(TRIANGLE_346)


@pytest.fixture
def six():
    return parse_system(SIX_GEN)


@pytest.fixture
def four():
    return parse_system(FOUR_GEN)


@pytest.fixture
def inf_dihedral():
    return parse_system(INF_DIHEDRAL)


@pytest.fixture
def record():
    """Store a one-line acceptance outcome: record(number, ok, detail)."""

    def _record(number, ok, detail):
        ACCEPTANCE[number] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
