import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# sympy oracles are slow on first use; time limits are asserted where they matter
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

RESULTS = {}


@pytest.fixture
def acceptance():
    """Record one criterion outcome; the summary is printed at the end of the run."""
    def record(number, title, ok, detail=""):
        RESULTS[number] = (title, ok, detail)
        print(_line(number, title, ok, detail))
        return ok
    return record


def _line(number, title, ok, detail):
    tail = f" ({detail})" if detail else ""
    return f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}{tail}"


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(_line(number, *RESULTS[number]))
