from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LEDGER

    if LEDGER:
        terminalreporter.section("acceptance criteria")
        for line in LEDGER:
            terminalreporter.write_line(line)
