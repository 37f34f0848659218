import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from triplecheck import catalog
from triplecheck.operators import multiplication_triple, zero_triple


@pytest.fixture(scope="session")
def octonions():
    return catalog.octonions()


@pytest.fixture(scope="session")
def gamma():
    return catalog.octonion_gamma()


@pytest.fixture(scope="session")
def model(octonions):
    return multiplication_triple(octonions)


@pytest.fixture(scope="session")
def quaternion_model():
    return multiplication_triple(catalog.quaternions())


@pytest.fixture(scope="session")
def zero_model(gamma):
    return zero_triple(8, gamma)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
