import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest


@pytest.fixture(scope="session")
def critical_slice():
    """5-vertex-critical (P5, bull)-free graphs up to order 9."""
    from critgraph.enumeration import EnumSpec, enumerate_critical
    from critgraph.graph6 import from_graph6
    from critgraph.patterns import BULL, path

    result = enumerate_critical(EnumSpec(5, (path(5), BULL), 9))
    return [from_graph6(s) for s in result.graphs]


_CRITERIA_RESULTS: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    number = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
    if report.when == "call" or report.failed:
        if report.failed or _CRITERIA_RESULTS.get(number) != "FAIL":
            _CRITERIA_RESULTS[number] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA_RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        status = _CRITERIA_RESULTS.get(number, "NOT RUN")
        terminalreporter.write_line(f"criterion {number}: {status} - {CRITERIA[number]}")
