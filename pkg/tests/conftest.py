import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chaingray import make_ring  # noqa: E402


@pytest.fixture(scope="session")
def z4():
    return make_ring("z4")


@pytest.fixture(scope="session")
def z8():
    return make_ring("z8")


@pytest.fixture(scope="session")
def z27():
    return make_ring("z27")


@pytest.fixture(scope="session")
def f4u3():
    return make_ring("f4u3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
