import pytest

from charthree.curve import Curve

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def curve9():
    return Curve(2)


@pytest.fixture(scope="session")
def curve27():
    return Curve(3)


@pytest.fixture(scope="session")
def places9(curve9):
    return curve9.enumerate_rational()


@pytest.fixture(scope="session")
def places27(curve27):
    return curve27.enumerate_rational()


@pytest.fixture(scope="session")
def tower9(curve9):
    return curve9.tower
