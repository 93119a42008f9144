"""Pytest configuration and shared fixtures for the test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add the src directory to Python path for imports
src_path = Path(__file__).parent.parent / "backend" / "src"
sys.path.insert(0, str(src_path))

from pmean_bandits.core import BanditInstance, Triangular  # noqa: E402


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


@pytest.fixture
def two_arm_bernoulli():
    """Deterministic two-arm instance: arm 0 never pays, arm 1 always does."""
    return BanditInstance.from_means([0.0, 1.0])


@pytest.fixture
def triangular_instance():
    """Ten triangular arms with means between 0.35 and 0.65."""
    gammas = np.linspace(0.05, 0.95, 10)
    return BanditInstance.from_arms(Triangular(gamma=float(g)) for g in gammas)


@pytest.fixture
def serial_workers(monkeypatch):
    """Force single-process replication for the duration of a test."""
    monkeypatch.setenv("PMB_THREADS", "1")
