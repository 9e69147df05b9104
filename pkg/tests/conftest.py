"""Shared fixture polygons.

All fixtures use small integer coordinates so exact arithmetic stays cheap.
Convexity and genericity of each were checked by hand (cross products and
line-triple determinants) before being frozen here.
"""

import pytest

from wachspress import cone_data, validate_polygon

_acceptance_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.fspath.basename == "test_acceptance.py":
        _acceptance_outcomes[item.name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        status = "PASS" if _acceptance_outcomes[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status} {name}")

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
PENTAGON = [(0, 0), (2, 0), (3, 2), (1, 3), (-1, 1)]
HEXAGON = [(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)]
HEPTAGON = [(0, 0), (2, 0), (4, 1), (5, 3), (3, 5), (1, 5), (-1, 2)]
OCTAGON = [(0, 0), (3, 0), (5, 2), (5, 4), (3, 6), (0, 6), (-2, 4), (-2, 2)]

# Edge lines 1, 3, 5 of this pentagon meet in one point, so it must be
# rejected even though it is convex.
NONGENERIC_PENTAGON = [(0, 0), (5, 0), (4, 2), (2, 1), (1, 3)]

FIXTURES = {
    4: SQUARE,
    5: PENTAGON,
    6: HEXAGON,
    7: HEPTAGON,
    8: OCTAGON,
}


def fixture_polygon(d):
    return validate_polygon(FIXTURES[d])


def fixture_cone(d):
    return cone_data(fixture_polygon(d))


@pytest.fixture
def square():
    return validate_polygon(SQUARE)


@pytest.fixture
def square_cone(square):
    return cone_data(square)


@pytest.fixture
def pentagon():
    return validate_polygon(PENTAGON)


@pytest.fixture
def hexagon():
    return validate_polygon(HEXAGON)


@pytest.fixture
def hexagon_cone(hexagon):
    return cone_data(hexagon)
