import logging
import os
from unittest.mock import patch

import pytest

from planar_lie import (
    InvalidInputError,
    NotClosed,
    PlanarLieClient,
    PlanarLieError,
    __version__,
)
from planar_lie.resources import Analysis, Catalog, Classification, Transforms
from planar_lie.utils.constants import DEFAULT_SEED
from tests.constants import SDK_VERSION, TEST_SEED


def test_version():
    """The package exposes its version."""
    assert __version__ == SDK_VERSION


# --- Configuration precedence ---


def test_client_initialization_default_seed(clean_env):
    """Without parameters or environment the fixed default seed is used."""
    client = PlanarLieClient()
    assert client.seed == DEFAULT_SEED
    assert client.log_level is None


def test_client_initialization_seed_from_env():
    """PLANAR_LIE_SEED is read when no seed is passed."""
    with patch.dict(os.environ, {"PLANAR_LIE_SEED": "99"}, clear=True):
        assert PlanarLieClient().seed == 99


def test_client_initialization_seed_priority():
    """The constructor seed overrides the environment variable."""
    with patch.dict(os.environ, {"PLANAR_LIE_SEED": "99"}, clear=True):
        assert PlanarLieClient(seed=TEST_SEED).seed == TEST_SEED


def test_client_initialization_invalid_seed():
    """A non-integer seed in the environment is rejected."""
    with patch.dict(os.environ, {"PLANAR_LIE_SEED": "abc"}, clear=True):
        with pytest.raises(InvalidInputError, match="Seed must be an integer"):
            PlanarLieClient()


def test_client_initialization_log_level(clean_env):
    """log_level is applied to the package logger."""
    logger = logging.getLogger("planar_lie")
    previous = logger.level
    try:
        PlanarLieClient(log_level="debug")
        assert logger.level == logging.DEBUG
    finally:
        logger.setLevel(previous)


def test_client_initialization_log_level_from_env():
    """PLANAR_LIE_LOG_LEVEL is read when no level is passed."""
    logger = logging.getLogger("planar_lie")
    previous = logger.level
    try:
        with patch.dict(os.environ, {"PLANAR_LIE_LOG_LEVEL": "ERROR"}, clear=True):
            assert PlanarLieClient().log_level == "ERROR"
        assert logger.level == logging.ERROR
    finally:
        logger.setLevel(previous)


def test_client_initialization_unknown_log_level(clean_env):
    """Unknown level names are rejected."""
    with pytest.raises(InvalidInputError, match="Unknown log level 'loud'"):
        PlanarLieClient(log_level="loud")


# --- Resources ---


def test_client_resources(client):
    """Resources are created lazily and cached."""
    assert isinstance(client.analysis, Analysis)
    assert isinstance(client.classification, Classification)
    assert isinstance(client.catalog, Catalog)
    assert isinstance(client.transforms, Transforms)
    assert client.analysis is client.analysis


def test_client_repr(client):
    """repr shows the seed; resources show their client."""
    assert repr(client) == f"PlanarLieClient(seed={TEST_SEED})"
    assert repr(client.catalog) == f"Catalog(client=PlanarLieClient(seed={TEST_SEED}))"


# --- Error wrapping ---


def test_run_passes_results_through(client, mocker):
    """run returns the wrapped call's result."""
    func = mocker.Mock(return_value={"ok": True})
    assert client.run("demo", func, 1, key="value") == {"ok": True}
    func.assert_called_once_with(1, key="value")


def test_run_reraises_library_errors(client, mocker):
    """Library errors pass through unchanged."""
    error = NotClosed(0, 1, "x*Dx")
    func = mocker.Mock(side_effect=error)
    with pytest.raises(NotClosed) as excinfo:
        client.run("demo", func)
    assert excinfo.value is error


def test_run_wraps_unexpected_errors(client, mocker):
    """Anything else becomes a PlanarLieError chained to its cause."""
    func = mocker.Mock(side_effect=ZeroDivisionError("boom"))
    with pytest.raises(PlanarLieError, match="An unexpected error occurred: boom") as excinfo:
        client.run("demo", func)
    assert isinstance(excinfo.value.__cause__, ZeroDivisionError)
