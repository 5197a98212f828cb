import os

import pytest
from hypothesis import HealthCheck, settings

from montesinos_slopes.params import knot
from montesinos_slopes.verify import GridSpec, grid_instances

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile(
    "ci", deadline=None, max_examples=50, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# instances named throughout the test suite
K_NEG = ((-4, -1), (2, -1), (2, -1))
K_POS = ((-2, -1), (2, -1), (2, -1))
K_TIE = ((-4, -1), (4, -1), (4, -1))


@pytest.fixture(scope="session")
def k_neg():
    return knot(*K_NEG)


@pytest.fixture(scope="session")
def k_pos():
    return knot(*K_POS)


@pytest.fixture(scope="session")
def k_tie():
    return knot(*K_TIE)


@pytest.fixture(scope="session")
def default_grid():
    return list(grid_instances(GridSpec()))


# acceptance lines recorded by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
