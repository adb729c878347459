import pytest

from galring import GaloisRing

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def gr4_2():
    return GaloisRing(2, 2, 2)


@pytest.fixture(scope="session")
def gr4_3():
    return GaloisRing(2, 2, 3)


@pytest.fixture(scope="session")
def gr8_2():
    return GaloisRing(2, 3, 2)


@pytest.fixture(scope="session")
def gr8_3():
    return GaloisRing(2, 3, 3)


@pytest.fixture(scope="session")
def gr9_2():
    return GaloisRing(3, 2, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
