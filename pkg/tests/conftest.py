import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def corpus():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
