import numpy as np
import pytest

from xychain.spinmodel import ModelParams

ACCEPTANCE_LINES = []


def random_grid(n, seed, beta_max=50.0):
    """gamma in [-1, 1], eta in [-3, 3], beta|J| in (0, beta_max], J in {+-1, +-2}."""
    rng = np.random.default_rng(seed)
    pts = []
    for _ in range(n):
        J = float(rng.choice([-2.0, -1.0, 1.0, 2.0]))
        pts.append(ModelParams.from_beta(beta_max * (1 - rng.random()), J=J,
                                         gamma=rng.uniform(-1, 1), eta=rng.uniform(-3, 3)))
    return pts


@pytest.fixture(scope="session")
def grid():
    return random_grid(1000, seed=2024)


@pytest.fixture(scope="session")
def small_grid():
    return random_grid(100, seed=99)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
