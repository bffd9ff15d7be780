"""Shared fixtures: the orbit table and the full classification are
expensive enough that the suite computes each once per session."""

import pytest

from hgstate import classifier as cf
from hgstate import orbits as ob

# one "ACCEPTANCE n: PASS/FAIL" line per criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def orbit_table():
    return ob.enumerate_orbits()


@pytest.fixture(scope="session")
def classification(orbit_table):
    return cf.classify_all(table=orbit_table)


@pytest.fixture(scope="session")
def records(classification):
    return classification[0]


@pytest.fixture(scope="session")
def graph_records(classification):
    return classification[1]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
