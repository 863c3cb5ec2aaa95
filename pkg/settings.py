"""
Configuration loading: defaults, then the environment (and a local .env file),
then explicit overrides from the caller.
"""

import logging
import os

from dotenv import load_dotenv

from models import EngineSettings

_ = load_dotenv()

FIELD_ENV = "INTCX_FIELD"
LOG_LEVEL_ENV = "INTCX_LOG_LEVEL"


def load_settings(**overrides) -> EngineSettings:
    """
    Build engine settings.

    Args:
        **overrides: Values that win over the environment; None values are ignored

    Returns:
        Validated EngineSettings
    """
    values: dict = {}
    field = os.getenv(FIELD_ENV)
    if field:
        values["field"] = field
    log_level = os.getenv(LOG_LEVEL_ENV)
    if log_level:
        values["log_level"] = log_level.upper()
    values.update({key: value for key, value in overrides.items() if value is not None})
    settings = EngineSettings(**values)
    logging.info(f"[Settings] field={settings.field} log_level={settings.log_level}")
    return settings
