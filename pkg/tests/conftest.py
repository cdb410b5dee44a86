import os
import random

import pytest

from echow.rootweyl import root_system

#: criterion number -> (passed, description), filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running checks (set ECHOW_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ECHOW_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set ECHOW_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if passed else 'FAIL'}  {desc}")


@pytest.fixture(scope="session")
def e6():
    return root_system("E6")


@pytest.fixture(scope="session")
def e7():
    return root_system("E7")


@pytest.fixture(scope="session")
def e8():
    return root_system("E8")


@pytest.fixture
def rng():
    return random.Random(20261015)
