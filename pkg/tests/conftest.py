import os
from unittest.mock import patch

import pytest
from hypothesis import HealthCheck, settings

from planar_lie import PlanarLieClient
from planar_lie.algebra import make_span
from planar_lie.expr import parse_algebra_file
from tests.constants import TEST_SEED

# --- Hypothesis profiles ---

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# --- Shared Fixtures ---


@pytest.fixture(scope="function")
def client():
    """Fixture to provide a PlanarLieClient isolated from environment configuration."""
    with patch.dict(os.environ, {}, clear=True):
        yield PlanarLieClient(seed=TEST_SEED)


@pytest.fixture(scope="function")
def clean_env():
    """Fixture to run a test without PLANAR_LIE_* variables."""
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture
def span_of():
    """Helper to build a span from algebra-file text."""

    def _span_of(text):
        return make_span(parse_algebra_file(text))

    return _span_of


@pytest.fixture
def algebra_file(tmp_path):
    """Helper to write algebra-file text to a temporary path."""

    def _algebra_file(text, name="algebra.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _algebra_file
