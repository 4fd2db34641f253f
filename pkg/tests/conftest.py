import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = dict(report.user_properties).get("acceptance")
    if label:
        _acceptance.append((label, report.outcome, report.duration))


@pytest.fixture(autouse=True)
def _acceptance_label(request, record_property):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        record_property("acceptance", marker.args[0])


def _natural(item):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", item[0])]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in sorted(_acceptance, key=_natural):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f}s)")
