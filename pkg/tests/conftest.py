import sys

import pytest

from hermcycles import build, parse_family


def rs_of(name):
    return build(parse_family(name))


@pytest.fixture
def system():
    return rs_of


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=str):
        terminalreporter.write_line(results[key])
