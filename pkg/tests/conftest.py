import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, tuple[str, str, float, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    note = dict(report.user_properties).get("note", "")
    _criteria[number] = ("PASS" if report.passed else "FAIL", title, report.duration, note)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, secs, note = _criteria[number]
        line = f"AC{number:<2} {status}  {title}  ({secs:.1f}s)"
        terminalreporter.write_line(line + (f"  [{note}]" if note else ""))
