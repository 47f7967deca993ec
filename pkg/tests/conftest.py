"""Shared test fixtures.

The acceptance tests record one line per criterion through criterion_line;
the lines are replayed in a dedicated terminal section after the run so the
pass/fail status of every criterion is visible in one place.
"""

from __future__ import annotations

import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion_line():
    def record(text: str) -> None:
        _LINES.append(text)
        print(text)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
