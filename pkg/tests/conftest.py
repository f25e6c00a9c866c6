import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

SUITE_BUDGET = 30.0

_results: dict[int, tuple[str, bool, str]] = {}
_started = [0.0]


class AcceptanceLog:
    def record(self, number: int, title: str, passed: bool, detail: str) -> None:
        _results[number] = (title, bool(passed), detail)
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
        print(line)


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_sessionstart(session):
    _started[0] = time.perf_counter()


def _suite_line():
    elapsed = time.perf_counter() - _started[0]
    if 12 not in _results:
        return None, elapsed
    title, ok, detail = _results[12]
    ok = ok and elapsed < SUITE_BUDGET
    return (title, ok, f"{detail}; full run {elapsed:.1f} s (budget {SUITE_BUDGET:.0f} s)"), elapsed


def pytest_sessionfinish(session, exitstatus):
    line, _ = _suite_line()
    if line is not None and not line[1] and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, ok, detail = _results[number]
        if number == 12:
            line, _ = _suite_line()
            title, ok, detail = line
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
