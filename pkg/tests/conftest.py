import re

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print an explicit FAIL line for acceptance criteria (the passing ones
    print their own PASS line)."""
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or not report.failed:
        return
    if "test_acceptance" not in str(getattr(item, "fspath", "")):
        return
    match = re.search(r"criterion_(\d+)", item.name)
    if match:
        print("\n[criterion %2d] FAIL  %s" % (int(match.group(1)), item.name))
