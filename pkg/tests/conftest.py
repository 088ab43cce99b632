"""Shared fixtures; collects acceptance lines for the terminal summary."""

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion, then assert."""

    def record(num, name, ok, elapsed, limit, detail=""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        extra = f", {detail}" if detail else ""
        line = (
            f"ACCEPTANCE {num:2d} {name}: {status} "
            f"({elapsed:.2f}s, limit {limit:.0f}s{extra})"
        )
        ACCEPTANCE_LINES.append(line)
        assert ok, f"criterion {num} ({name}): {detail}"
        assert elapsed < limit, (
            f"criterion {num} ({name}) took {elapsed:.2f}s, limit {limit}s"
        )

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
