import logging


def setup_logging(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    if not logger.hasHandlers():
        logger.addHandler(logging.NullHandler())
    return logger


def configure_cli_logging(level: str | None) -> None:
    """Attach a stderr handler for command-line runs; libraries never call this."""
    resolved = (level or "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, resolved, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
