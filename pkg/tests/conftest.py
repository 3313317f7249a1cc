import os
import random

import pytest
from hypothesis import HealthCheck, settings

import acceptance_log

SEED = int(os.environ.get("POISSON_LAB_SEED", "20240611"))

settings.register_profile(
    "lab",
    deadline=None,
    max_examples=60,
    derandomize="POISSON_LAB_SEED" not in os.environ,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lab")


def pytest_configure(config):
    if "POISSON_LAB_SEED" in os.environ and hasattr(config.option, "hypothesis_seed"):
        config.option.hypothesis_seed = SEED


@pytest.fixture
def rng(request):
    # one independent stream per test, reproducible from the session seed
    return random.Random(f"{SEED}:{request.node.nodeid}")


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
