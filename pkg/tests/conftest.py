"""Shared pytest hooks: surface the acceptance-criterion result lines."""

import sys


def pytest_terminal_summary(terminalreporter):
    module = None
    for name, mod in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] == "test_acceptance" and mod is not None:
            module = mod
            break
    results = getattr(module, "CRITERION_RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in results:
        terminalreporter.write_line(line)
