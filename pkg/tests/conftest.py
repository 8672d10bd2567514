import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(number, ok, detail):
        _ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    return _record


def pytest_runtest_logreport(report):
    # A test that dies before calling record() still gets a FAIL line.
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.failed:
        number = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
        ok, detail = _ACCEPTANCE.get(number, (False, "raised before recording"))
        _ACCEPTANCE[number] = (False, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
