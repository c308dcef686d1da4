from itertools import combinations

import pytest
from hypothesis import strategies as st

from shiftchain_lab.constructions import construct_theorem1, random_shift_chain
from shiftchain_lab.core import edge_count_bound


@pytest.fixture(scope="session")
def h2():
    return construct_theorem1(2)[0]


@pytest.fixture(scope="session")
def h3():
    return construct_theorem1(3)[0]


@pytest.fixture(scope="session")
def h4():
    return construct_theorem1(4)[0]


def dominates(a, b):
    """Independent oracle for a ⪯ b."""
    return all(x <= y for x, y in zip(a, b))


def pairwise_comparable(edges):
    return all(dominates(a, b) or dominates(b, a) for a, b in combinations(edges, 2))


@st.composite
def increasing_tuples(draw, m=None, n=None):
    n = n if n is not None else draw(st.integers(1, 12))
    m = m if m is not None else draw(st.integers(1, n))
    return tuple(sorted(draw(st.sets(st.integers(1, n), min_size=m, max_size=m))))


@st.composite
def chain_params(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, n))
    t = draw(st.integers(1, edge_count_bound(m, n)))
    seed = draw(st.integers(0, 2**64 - 1))
    return n, m, t, seed


@st.composite
def random_chains(draw, max_n=12):
    return random_shift_chain(*draw(chain_params(max_n)))


_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion covered by a test")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = f"AC{mark.args[0]}: {mark.args[1]}"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s[2:].split(":")[0])):
        outcomes = _criteria[name]
        if "failed" in outcomes:
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        terminalreporter.write_line(f"[{status}] {name}")
