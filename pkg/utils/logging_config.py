"""
This module contains a function that configures the logging module to log to
the file named by the configuration, with its level and a specific format.

Functions:
    setup_logging(settings) -> None:
        Configures the root logger once per process.
"""

import logging

from config.config import Config


def setup_logging(settings=Config) -> None:
    """
    Configures the logging module to log to the configured file with the
    configured level and a specific format. Without a log file, records are
    discarded.
    """
    if settings.LOG_FILE:
        logging.basicConfig(
            filename=settings.LOG_FILE,
            level=getattr(logging, str(settings.LOG_LEVEL).upper(), logging.INFO),
            format="%(asctime)s %(levelname)s:%(message)s",
        )
    else:
        logging.basicConfig(handlers=[logging.NullHandler()], level=logging.WARNING)
