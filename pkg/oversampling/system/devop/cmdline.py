"""Helper functions to set up logging and settings for command line applications."""
# Standard Library
import logging
import os
import sys
import typing as t

# Pyramid
import plaster

from rainbow_logging_handler import RainbowLoggingHandler

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.utils.config import prepare_config_uri


def setup_logging(config_uri: str, disable_existing_loggers: bool = False):
    """Include-aware Python logging setup from INI config file.

    :param config_uri: Configuration uri, i.e.: oversampling/conf/development.ini
    """
    config_uri = prepare_config_uri(config_uri)
    loader = plaster.get_loader(config_uri)
    loader.setup_logging(disable_existing_loggers=disable_existing_loggers)


def setup_console_logging(log_level: t.Optional[str] = None):
    """Setup console logging.

    Log records go to stderr so that reports on stdout stay machine readable. The level comes from the argument, else from the ``LOG_LEVEL`` environment variable, else ``warning``.
    """
    formatter = logging.Formatter("[%(asctime)s] [%(name)s %(funcName)s] %(message)s")

    handler = RainbowLoggingHandler(sys.stderr)
    handler.setFormatter(formatter)
    logger = logging.getLogger()
    logger.handlers = [handler]

    level_name = log_level or os.environ.get("LOG_LEVEL", "warning")
    logger.setLevel(getattr(logging, level_name.upper()))


def load_settings(config_uri: t.Optional[str] = None) -> Settings:
    """Settings from an INI file, or the defaults when no file is given.

    Logging is configured from the same file.

    :param config_uri: Path to INI file, optionally prefixed with ``osc://``
    """
    if not config_uri:
        setup_console_logging()
        return DEFAULT_SETTINGS
    setup_logging(config_uri)
    return Settings.from_config_uri(config_uri)
