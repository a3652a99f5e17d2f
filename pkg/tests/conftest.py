"""Shared pytest configuration.

After the run, prints one line per acceptance criterion recorded by
tests/test_acceptance.py, so the pass/fail status of the acceptance gate
is visible in any pytest invocation, not only with -s.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "CRITERION_RESULTS", None)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
