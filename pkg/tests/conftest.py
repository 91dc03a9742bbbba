from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tritile.exact import QuadNum
from tritile.geometry import Triangle

GENERIC = Triangle.of((0, 0), (7, 1), (2, 5))

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def quads(draw, radicand=None):
    d = radicand if radicand is not None else draw(st.sampled_from([2, 3, 5, 6, 7]))
    return QuadNum(draw(small_fracs), draw(small_fracs), d)


@pytest.fixture
def generic() -> Triangle:
    return GENERIC


def approx_float(q: QuadNum) -> float:
    return float(Fraction(q.rat)) + float(Fraction(q.irr)) * q.radicand ** 0.5


# Acceptance summary: one PASS/FAIL line per criterion at the end of the run.
_CRITERIA: dict[int, tuple[str, list[bool]]] = {}
_NODES: dict[str, int] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _CRITERIA.setdefault(m.args[0], (m.args[1], []))
            _NODES[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    number = _NODES.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA[number][1].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, results = _CRITERIA[number]
        status = ("PASS" if all(results) else "FAIL") if results else "NOT RUN"
        terminalreporter.write_line(f"criterion {number:>2}: {status:<7} {title}")
