import pytest

from setgames import GameStore, enumerate_tier


@pytest.fixture
def store():
    return GameStore()


@pytest.fixture(scope="module")
def shared_store():
    return GameStore()


@pytest.fixture(scope="module")
def tier2(shared_store):
    return enumerate_tier(shared_store, 2).members


# acceptance criteria record one line each here; printed after the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, line = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] {number}. {line}")
