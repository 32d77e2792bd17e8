import pytest
from hypothesis import settings

from fusionkit.root_system import root_system
from fusionkit.weyl_group import generate

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ROSTER = ("A1", "A2", "A3", "B2", "C2", "C3", "G2")
ALL_SMALL = ROSTER + ("A4", "B3", "C4", "D4", "F4")

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def group():
    cache = {}

    def get(t):
        if t not in cache:
            rs = root_system(t)
            cache[t] = (rs, generate(rs))
        return cache[t]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
