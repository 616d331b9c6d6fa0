import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# numerical property tests: examples are cheap but the first oracle call per
# parameter set pays for a dense diagonalization
settings.register_profile(
    "kerrdown",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kerrdown")


@pytest.fixture(scope="session")
def grid_times():
    return np.linspace(0.0, 3.0, 50)
