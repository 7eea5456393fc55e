import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pseudocone import BinaryMatrix, circulant, hamming_simplex_H  # noqa: E402

# d_P = 3 < d = 5, found by random search with the ray enumerator as oracle
NOT_OPTIMAL_H = [
    [1, 1, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1],
]


@pytest.fixture
def ex1():
    return circulant([1, 1, 0, 1, 0, 0, 0])


@pytest.fixture
def hamming():
    return hamming_simplex_H(3)


@pytest.fixture
def not_optimal():
    return BinaryMatrix(np.array(NOT_OPTIMAL_H, dtype=np.uint8))


def shifts(v):
    return {tuple(v[-k:] + v[:-k]) if k else tuple(v) for k in range(len(v))}


# one PASS/FAIL line per acceptance criterion, aggregated over its sub-tests
_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker is None:
        return
    num, title = item_marker
    entry = _criteria.setdefault(num, {"title": title, "ok": True, "failed": []})
    if report.failed:
        entry["ok"] = False
        entry["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        status = "PASS" if e["ok"] else "FAIL"
        extra = "" if e["ok"] else f"  (failing: {', '.join(e['failed'])})"
        terminalreporter.write_line(f"AC{num:<2} {status}  {e['title']}{extra}")
