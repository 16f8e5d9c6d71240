import os
import random
import tempfile

import pytest
from hypothesis import HealthCheck, settings

# Keep the on-disk diagram cache out of the user's data directory during tests.
os.environ.setdefault("STRINGLINKS_CACHE", tempfile.mkdtemp(prefix="stringlinks-test-cache-"))

DEFAULT_SEED = 20240917

settings.register_profile(
    "default",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized tests")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
