"""Hypothesis settings and the PASS/FAIL summary for the acceptance criteria."""

from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

CRITERIA = {
    1: "1-D closed forms for T_r and C^t_r, and the core emptiness threshold",
    2: "Tverberg partitions exist for (r-1)(d+1)+1 random points",
    3: "ten-point counterexample in R^5 passes all five checks",
    4: "cascade construction on the curated suite",
    5: "cascade inequality on curated sets and the cross dims",
    6: "Rado bound: centerpoint cell nonempty with depth > t",
    7: "containment chain T_{r+t} in C^t_r in T_r",
    8: "certificate soundness for linear systems and negative verdicts",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for n in getattr(report, "criteria", ()):
        _outcomes.setdefault(n, []).append(report.outcome == "passed")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        status = "PASS" if all(_outcomes[n]) else "FAIL"
        terminalreporter.write_line(f"{status} criterion {n}: {CRITERIA[n]} ({len(_outcomes[n])} tests)")
