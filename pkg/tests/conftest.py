import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

SUITE_LIMIT_SECONDS = 60
_results: list = []
_start = time.perf_counter()


class Recorder:
    def __call__(self, criterion: str, passed: bool, detail: str) -> bool:
        _results.append((criterion, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'} {criterion}: {detail}")
        return passed


@pytest.fixture(scope="session")
def record():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    elapsed = time.perf_counter() - _start
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion, passed, detail in _results:
        tr.write_line(f"{'PASS' if passed else 'FAIL'} {criterion}: {detail}")
    ok = elapsed < SUITE_LIMIT_SECONDS
    tr.write_line(
        f"{'PASS' if ok else 'FAIL'} 7a full suite runtime: {elapsed:.1f} s (limit {SUITE_LIMIT_SECONDS} s)"
    )
