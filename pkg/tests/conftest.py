import pytest

# acceptance tests append (criterion, passed, detail) here
ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance_line():
    def record(criterion: str, passed: bool, detail: str):
        ACCEPTANCE_LINES.append((criterion, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'} {criterion}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {criterion}: {detail}")
