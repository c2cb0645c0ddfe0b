import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion; the line is printed at the end of the run."""

    def record(number, summary):
        _CRITERIA[number] = summary

    yield record
    number = request.node.get_closest_marker("criterion").args[0]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    line = _CRITERIA.get(number, "")
    _CRITERIA[number] = f"{'FAIL' if failed else 'PASS'} criterion {number:2d}: {line}"
    print(_CRITERIA[number])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])
