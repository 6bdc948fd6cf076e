import logging
import os
from collections.abc import Callable
from functools import cached_property
from typing import ParamSpec, TypeVar

from .exceptions import InvalidInputError, PlanarLieError
from .resources import Analysis, Catalog, Classification, Transforms
from .utils.constants import DEFAULT_SEED, LOG_LEVEL_ENV_VAR, SEED_ENV_VAR
from .utils.logging import setup_logging

logger = setup_logging(__name__)

P = ParamSpec("P")
R = TypeVar("R")


class PlanarLieClient:
    """
    Entry point for classifying finite-dimensional Lie algebras of planar vector fields.

    Example:
        >>> from planar_lie import PlanarLieClient, PlanarLieError
        >>>
        >>> client = PlanarLieClient()
        >>> try:
        ...     text = client.catalog.emit("nilpotent", {"N": 2})["text"]
        ...     report = client.classification.classify(text)
        ...     print(report["family"])
        ... except PlanarLieError as e:
        ...     print(f"An error occurred: {e}")

    Attributes:
        seed (int): Seed for the randomized self-tests.
        log_level (str | None): Level applied to the ``planar_lie`` logger, if any.
    """

    def __init__(self, seed: int | None = None, log_level: str | None = None):
        """
        Initializes the PlanarLieClient.

        The order of precedence for configuration is:
        1. Direct parameter (`seed`, `log_level`).
        2. Environment variable (`PLANAR_LIE_SEED`, `PLANAR_LIE_LOG_LEVEL`).
        3. Default value (fixed seed; logging left to the application).

        Raises:
            InvalidInputError: If the seed or log level cannot be interpreted.
        """
        raw_seed = seed if seed is not None else os.environ.get(SEED_ENV_VAR)
        try:
            self.seed = DEFAULT_SEED if raw_seed is None else int(raw_seed)
        except (TypeError, ValueError):
            raise InvalidInputError(
                f"Seed must be an integer, got {raw_seed!r}. Check {SEED_ENV_VAR}."
            ) from None

        self.log_level = log_level or os.environ.get(LOG_LEVEL_ENV_VAR)
        if self.log_level:
            level = logging.getLevelName(self.log_level.upper())
            if not isinstance(level, int):
                raise InvalidInputError(f"Unknown log level '{self.log_level}'.")
            logging.getLogger("planar_lie").setLevel(level)

        from . import __version__

        logger.info(f"PlanarLieClient initialized. Seed: {self.seed}, version: {__version__}")

    def __repr__(self) -> str:
        return f"PlanarLieClient(seed={self.seed})"

    @cached_property
    def analysis(self) -> Analysis:
        return Analysis(self)

    @cached_property
    def classification(self) -> Classification:
        return Classification(self)

    @cached_property
    def catalog(self) -> Catalog:
        return Catalog(self)

    @cached_property
    def transforms(self) -> Transforms:
        return Transforms(self)

    def run(self, action: str, func: Callable[P, R], *args: P.args, **kwargs: P.kwargs) -> R:
        """
        Runs a resource call, passing library errors through and wrapping anything else.

        Raises:
            PlanarLieError: For every failure; unexpected exceptions are chained.
        """
        try:
            return func(*args, **kwargs)
        except PlanarLieError as err:
            logger.warning(f"{action} failed: {err}")
            raise
        except Exception as e:
            logger.error(f"An unexpected error occurred during {action}: {e}", exc_info=True)
            raise PlanarLieError(f"An unexpected error occurred: {e}") from e
