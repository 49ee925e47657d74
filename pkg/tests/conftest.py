import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hconv import Grid, TransformParams

settings.register_profile(
    "default", deadline=None, max_examples=25,
    suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.register_profile("ci", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")

# lines collected by tests/test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def big_grid():
    return Grid(20.0, 2049)


@pytest.fixture(scope="session")
def small_grid():
    return Grid(10.0, 257)


@pytest.fixture(scope="session")
def hartley():
    return TransformParams(1.0, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
