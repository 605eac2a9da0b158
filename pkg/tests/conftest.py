import pytest

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion: ``criterion(n, text)`` after its asserts pass."""
    recorded = {}

    def record(number: int, text: str):
        recorded["n"] = number
        ACCEPTANCE_RESULTS[number] = (False, text)
        return _Marker(number, text)

    return record


class _Marker:
    def __init__(self, number, text):
        self.number, self.text = number, text

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ACCEPTANCE_RESULTS[self.number] = (exc_type is None, self.text)
        return False


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {text}")
