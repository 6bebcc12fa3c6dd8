import os
import random

import pytest
from hypothesis import HealthCheck, settings

from ppav.exact import Matrix

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail, status=None):
    status = status or ("PASS" if ok else "FAIL")
    ACCEPTANCE_LINES.append(f"[criterion {number}] {status}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_int_matrix(rng, rows, cols, bound=9):
    return Matrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


@pytest.fixture
def rng():
    return random.Random(20240601)
