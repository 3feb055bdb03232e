"""Shared fixtures: the expensive searches run once per session.

Also prints a one-line PASS/FAIL summary per acceptance criterion at the
end of the run, so the acceptance status is readable without scrolling.
"""

from __future__ import annotations

import pytest

from starcomp.algebra import qnum
from starcomp.engine import make_context, search_star_sets
from starcomp.kts import make_kts


@pytest.fixture(scope="session")
def k33_ctx():
    return make_context(make_kts(3, 3), qnum(1), bipartite_tag=(3, 3))


@pytest.fixture(scope="session")
def k33_sweep(k33_ctx):
    return search_star_sets(k33_ctx, require_regular="sweep")


@pytest.fixture(scope="session")
def k15_sweep():
    ctx = make_context(make_kts(1, 5), qnum(1), bipartite_tag=(1, 5))
    return search_star_sets(ctx, require_regular="sweep")


@pytest.fixture(scope="session")
def k66_ctx():
    return make_context(make_kts(6, 6), qnum(-2), bipartite_tag=(6, 6))


@pytest.fixture(scope="session")
def k66_r8(k66_ctx):
    return search_star_sets(k66_ctx, require_regular=8)


@pytest.fixture(scope="session")
def k66_r10(k66_ctx):
    return search_star_sets(k66_ctx, require_regular=10)


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid:
        if report.when == "call" or (report.when == "setup" and report.failed):
            _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE):
        word = {"passed": "PASS", "failed": "FAIL"}.get(
            _ACCEPTANCE[nodeid], _ACCEPTANCE[nodeid].upper())
        terminalreporter.write_line(f"{word}  {nodeid.split('::')[-1]}")
