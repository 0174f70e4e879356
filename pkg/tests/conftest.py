"""Shared pytest wiring for the acceptance gate's per-criterion summary."""

import pytest

_criterion_lines = []


@pytest.fixture(scope="session")
def criterion_report():
    """Record and assert one pass/fail line per acceptance criterion."""

    def _report(num, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}"
        _criterion_lines.append(line)
        print(line)
        assert ok, line

    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
