import pytest

CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(name: str, passed: bool, detail: str) -> None:
        CRITERIA[name] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda k: int(k.split()[0])):
        passed, detail = CRITERIA[name]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
