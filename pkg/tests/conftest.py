import re

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = f"criterion {m.group(1)} ({m.group(2).replace('_', ' ')})"
    if report.when == "setup" and report.skipped:
        _acceptance[key] = "SKIP"
    elif report.when == "call":
        if hasattr(report, "wasxfail"):
            _acceptance[key] = "UNATTAINABLE (expected failure, see notes)" if report.skipped \
                else "UNEXPECTED PASS"
        else:
            _acceptance[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=lambda k: (int(k.split()[1]), k)):
        terminalreporter.write_line(f"{_acceptance[key]:<5} {key}")


@pytest.fixture(scope="session")
def fx():
    from polyoideal import fixtures
    return fixtures
