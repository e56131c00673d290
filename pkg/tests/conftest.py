import sys

import pytest

from hfsoft import load_scenario


@pytest.fixture(scope="session")
def ex35():
    return load_scenario("example_3_5.json")


@pytest.fixture(scope="session")
def ex310():
    return load_scenario("example_3_10.json")


@pytest.fixture(scope="session")
def thm311():
    return load_scenario("thm_3_11.json")


@pytest.fixture(scope="session")
def ex314():
    return load_scenario("example_3_14.json")


@pytest.fixture(scope="session")
def thm317():
    return load_scenario("thm_3_17.json")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "SCORECARD", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
