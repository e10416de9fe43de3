import logging
from logging.config import fileConfig
from pathlib import Path
from typing import Optional

LOGGING_CONFIG = Path(__file__).with_name("logging.ini")


def setup_logging(level: Optional[str] = None) -> None:
    """Configure handlers from logging.ini, optionally overriding the app level."""
    fileConfig(LOGGING_CONFIG, disable_existing_loggers=False)
    if level:
        logging.getLogger("app").setLevel(level.upper())
