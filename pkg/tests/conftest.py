from pathlib import Path

import pytest

from charslope import fixtures
from charslope.census import load_census

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def census():
    return load_census(fixtures.census_path())


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
