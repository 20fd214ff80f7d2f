"""Shared fixtures and the acceptance-gate summary hook."""
from __future__ import annotations

import numpy as np
import pytest

from ncgauge import MatrixBasis

# Result lines registered by tests/test_acceptance.py; printed at the end of
# every run so the gate verdict is visible regardless of output capturing.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance gate")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def basis2() -> MatrixBasis:
    return MatrixBasis.gellmann(2)


@pytest.fixture(scope="session")
def basis3() -> MatrixBasis:
    return MatrixBasis.gellmann(3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
