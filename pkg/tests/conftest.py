import pytest

from cordal.action import clear_caches

# filled by test_acceptance.py, printed after the run
ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(autouse=True)
def _fresh_caches():
    yield
    clear_caches()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
