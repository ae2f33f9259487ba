"""
Configuration module for the application.
"""

import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Base configuration class."""

    # Report schema
    SCHEMA_VERSION = "1"

    # Logging
    LOG_FILE = os.getenv("GRADINF_LOG_FILE", "gradinf.log")
    LOG_LEVEL = os.getenv("GRADINF_LOG_LEVEL", "INFO")

    # Newton-Puiseux oracle: extra terms after a branch becomes regular
    # (0 means n choose 2, at least 2), deepening attempts, restarts after
    # a dynamic evaluation split
    PUISEUX_SAFETY_TERMS = int(os.getenv("GRADINF_PUISEUX_SAFETY_TERMS", "0"))
    PUISEUX_MAX_DEEPEN = int(os.getenv("GRADINF_PUISEUX_MAX_DEEPEN", "6"))
    MAX_SPLIT_RESTARTS = int(os.getenv("GRADINF_MAX_SPLIT_RESTARTS", "64"))

    # Rational values outside the critical set probed by the analyze command
    GENERIC_PROBES = int(os.getenv("GRADINF_GENERIC_PROBES", "5"))

    # Run the Newton-Puiseux cross-check inside analyze
    ORACLE_IN_ANALYZE = os.getenv("GRADINF_ORACLE_IN_ANALYZE", "1") == "1"


class DevelopmentConfig(Config):
    """Development configuration."""

    DEBUG = True
    LOG_LEVEL = os.getenv("GRADINF_LOG_LEVEL", "DEBUG")


class ProductionConfig(Config):
    """Production configuration."""

    DEBUG = False


class TestingConfig(Config):
    """Testing configuration."""

    DEBUG = True
    LOG_FILE = None


config = {
    "development": DevelopmentConfig,
    "production": ProductionConfig,
    "testing": TestingConfig,
    "default": ProductionConfig,
}


def safety_terms(n: int, settings=Config) -> int:
    """Extra expansion terms for a polynomial of degree n."""
    if settings.PUISEUX_SAFETY_TERMS > 0:
        return settings.PUISEUX_SAFETY_TERMS
    return max(n * (n - 1) // 2, 2)
