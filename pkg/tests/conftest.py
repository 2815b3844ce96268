"""Shared fixtures and the per-criterion acceptance summary."""
from __future__ import annotations

from collections import OrderedDict

import pytest

from multitoric.finite_field import build_field
from multitoric.graph import build_graph
from multitoric.toric_set import enumerate_X

_CRITERIA: "OrderedDict[int, str]" = OrderedDict()
_ITEM_CRITERION: dict[str, int] = {}
_OUTCOMES: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test checks")


def pytest_collection_modifyitems(session, config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is None:
            continue
        number, title = mark.args
        _CRITERIA.setdefault(number, title)
        _ITEM_CRITERION[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _ITEM_CRITERION.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _OUTCOMES.setdefault(number, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        outcomes = _OUTCOMES.get(number, [])
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            verdict = "PASS"
        elif any(o == "failed" for o in outcomes):
            verdict = "FAIL"
        else:
            verdict = "SKIPPED"
        terminalreporter.write_line(f"criterion {number}: {verdict} ({_CRITERIA[number]}, {len(outcomes)} checks)")


@pytest.fixture(scope="session")
def toric():
    """Cached (graph, field, X) triples keyed by (parts, q)."""
    cache = {}

    def get(parts, q):
        key = (tuple(parts), q)
        if key not in cache:
            g = build_graph(tuple(parts))
            F = build_field(q)
            cache[key] = (g, F, enumerate_X(g, F))
        return cache[key]

    return get
