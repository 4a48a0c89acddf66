"""Collects the acceptance criterion lines and prints them after the run."""

CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
