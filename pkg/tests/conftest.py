"""
Pytest configuration and shared fixtures for the Riordan toolkit test suite.

This module provides fixtures for:
- Truncation order and matrix size defaults
- A seeded random generator for property tests
- The vendored OEIS fixture directory
- Environment configuration
"""
import os
import random
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.utils.config import FIXTURE_DIR


# ============================================================================
# Pytest Configuration
# ============================================================================

def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "golden: Entry-for-entry comparisons with reference matrices")
    config.addinivalue_line("markers", "property: Seeded randomized property tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests")
    config.addinivalue_line("markers", "cli: Command-line tests")
    config.addinivalue_line("markers", "oeis: OEIS fixture tests")


def pytest_collection_modifyitems(config, items):
    """Automatically mark tests based on directory."""
    for item in items:
        path = str(item.fspath)
        if "test_algebra" in path:
            item.add_marker(pytest.mark.unit)
        elif "test_cli" in path:
            item.add_marker(pytest.mark.cli)
        elif "test_oeis" in path:
            item.add_marker(pytest.mark.oeis)
        elif "test_verification" in path:
            item.add_marker(pytest.mark.integration)
            item.add_marker(pytest.mark.slow)


# ============================================================================
# Shared fixtures
# ============================================================================

SEED = 20240611


@pytest.fixture
def order() -> int:
    """Default truncation order for series-level tests."""
    return 12


@pytest.fixture
def size() -> int:
    """Default matrix size; matches the order fixture."""
    return 13


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized tests are reproducible."""
    return random.Random(SEED)


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


# ============================================================================
# Environment Configuration
# ============================================================================

@pytest.fixture(autouse=True)
def setup_test_env(monkeypatch):
    """
    Setup test environment variables.

    Automatically applied to all tests so that fixtures are always read from
    the vendored directory and nothing is written to a log file.
    """
    monkeypatch.setenv("OEIS_CACHE_DIR", str(FIXTURE_DIR))
    monkeypatch.setenv("LOG_FILE", "")
    monkeypatch.setenv("LOG_LEVEL", "WARNING")

    yield
