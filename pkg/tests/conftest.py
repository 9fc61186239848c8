from functools import lru_cache

import pytest

from formdual.suites import SUITE_ORDER, run_suite


@lru_cache(maxsize=None)
def _outcome(name):
    return run_suite(name)


@pytest.fixture(scope="session")
def outcomes():
    """All verification suites, run once per test session."""
    return {name: _outcome(name) for name in SUITE_ORDER}
