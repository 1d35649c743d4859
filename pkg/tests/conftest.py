import sys

import pytest

from bergman import catalog
from bergman import subsets as ss


def S(*labels):
    """Subset from 1-based labels: S(1, 2, 3, 4)."""
    return ss.from_labels(labels)


def F(text):
    """Subset from digit notation: F('1234')."""
    return ss.from_labels(int(c) for c in text)


@pytest.fixture(scope="session")
def m6():
    return catalog.three_circuits()


@pytest.fixture(scope="session")
def instances():
    return catalog.instances()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
