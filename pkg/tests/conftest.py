from __future__ import annotations

import pytest
from hypothesis import settings

from vii_moduli import mk_surface

# exact enumeration on tiny volumes is slow per example but bounded
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_criteria: list[tuple[int, str, str]] = []


@pytest.fixture
def half():
    return mk_surface("half", 2)


@pytest.fixture
def enoki5():
    return mk_surface("enoki", 1, deg_K=5)


@pytest.fixture
def enoki_neg():
    return mk_surface("enoki", 1, deg_K=-1)


@pytest.fixture
def parabolic():
    return mk_surface("parabolic", 1, vol_E=1)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    # one line per criterion; it passes only if every test tagged with it passed
    merged: dict[int, tuple[str, bool]] = {}
    for number, title, outcome in _criteria:
        prev = merged.get(number, (title, True))
        merged[number] = (prev[0], prev[1] and outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for number in sorted(merged):
        title, ok = merged[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
