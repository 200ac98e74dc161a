from pathlib import Path

import pytest

from semilab import validate
from semilab.census import census_tables
from semilab.pattern import M_TABLE

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

A, B, C, D = range(4)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="include order-6 census runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def M():
    return M_TABLE


@pytest.fixture
def trivial():
    return validate(1, [[0]])


@pytest.fixture
def left_zero2():
    return validate(2, [[0, 0], [1, 1]])


@pytest.fixture
def right_zero2():
    return validate(2, [[0, 1], [0, 1]])


@pytest.fixture
def semilattice2():
    # 0 is the top, 1 the bottom
    return validate(2, [[0, 1], [1, 1]])


@pytest.fixture
def chain3():
    return validate(3, [[min(i, j) for j in range(3)] for i in range(3)])


@pytest.fixture(scope="session")
def census():
    """Isomorphism-only census tables by order, 1..5."""
    return {n: census_tables(n, "iso") for n in range(1, 6)}


@pytest.fixture(scope="session")
def census_upto5(census):
    return [t for n in range(1, 6) for t in census[n]]


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        # a criterion split over several tests fails if any part fails
        prev = _ACCEPTANCE.get(number, ("PASS", title))[0]
        if prev == "FAIL":
            status = "FAIL"
        _ACCEPTANCE[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
