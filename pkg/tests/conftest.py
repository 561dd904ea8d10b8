"""
Shared fixtures.

Run with: uv run pytest            (everything)
          uv run pytest -m "not slow"
"""

import sys
from pathlib import Path

# Add project root to path so we can import the packages
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from asymptotics.optimizer import OptimizerSettings
from galois_core.instance import sample_instance
from shared.debug_log import debug
from shared.settings import use_settings


@pytest.fixture(autouse=True)
def reset_state():
    """Default settings and log threshold for every test."""
    use_settings(None)
    debug.set_level("WARN")
    yield
    use_settings(None)
    debug.set_level("INFO")
    debug.clear()


@pytest.fixture
def stern_instance():
    """q=13, z=4, n=24, k=12, w=5: the planted error is unique w.h.p."""
    return sample_instance(13, 4, 24, 12, 5, seed=7)


@pytest.fixture
def fast_optimizer():
    """Coarser search for tests that only need a feasible optimum."""
    return OptimizerSettings(grid_density=5, restarts=8, top_seeds=2, initial_step=0.1,
                             shrink=0.2, step_floor=0.005)
