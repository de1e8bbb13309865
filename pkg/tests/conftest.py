"""Pytest hooks: print one PASS/FAIL line per acceptance criterion."""

from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_([a-z0-9_]+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[tuple[int, str], bool] = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            match = _CRITERION.search(nodeid)
            if match is None:
                continue
            key = (int(match.group(1)), match.group(2))
            ok = status == "passed"
            outcomes[key] = outcomes.get(key, True) and ok
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, name in sorted(outcomes):
        verdict = "PASS" if outcomes[(number, name)] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} ({name.replace('_', ' ')}): {verdict}")
