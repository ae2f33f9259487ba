"""
Utility decorators for the application.
"""

import functools
import logging

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from config.config import Config
from utils.exceptions import TruncationError


def log_errors(f):
    """Decorator to log errors in commands and services."""

    @functools.wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except Exception as e:
            logging.error("Error in %s: %s", f.__name__, e)
            raise

    return decorated_function


def deepen_on_truncation(f):
    """
    Decorator retrying a series computation with twice the depth each time a
    TruncationError is raised. The wrapped function takes a keyword argument
    depth_factor (1, 2, 4, ...).
    """

    @functools.wraps(f)
    def decorated_function(*args, **kwargs):
        retrying = Retrying(
            retry=retry_if_exception_type(TruncationError),
            stop=stop_after_attempt(Config.PUISEUX_MAX_DEEPEN),
            reraise=True,
        )
        for attempt in retrying:
            with attempt:
                factor = 2 ** (attempt.retry_state.attempt_number - 1)
                if factor > 1:
                    logging.debug("Deepening %s, depth factor %d", f.__name__, factor)
                return f(*args, depth_factor=factor, **kwargs)
        return None

    return decorated_function
