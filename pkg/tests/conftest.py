import pytest

from geoent import OptimizerConfig


@pytest.fixture
def config():
    """Default optimizer configuration (what the acceptance criteria use)."""
    return OptimizerConfig()


@pytest.fixture
def fast_config():
    """Reduced restarts for unit tests that only need a decent optimum."""
    return OptimizerConfig(restarts=16, seed=0)
