import os
import logging
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional

from dotenv import dotenv_values, load_dotenv

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "SLQ_CONFIG"
DEFAULT_CONFIG_PATH = Path(".") / "slq.conf"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    preset: str = "rplus"
    mu: Optional[str] = None
    nu: Optional[str] = None
    degree_cap: int = 3
    max_n: int = 5
    samples: int = 100
    seed: int = 0
    workers: int = 1
    log_level: str = "WARNING"


_INT_KEYS = {"degree_cap", "max_n", "samples", "seed", "workers"}
_NONNEGATIVE_KEYS = {"degree_cap", "max_n", "samples", "seed"}


def load_environment_variables():
    """
    Load environment variables from a .env file in the working directory.
    Variables already set in the environment win.
    """
    env_path = Path(".") / ".env"
    if env_path.exists():
        logger.info(f"Loading environment variables from {env_path}")
        load_dotenv(dotenv_path=env_path)
    else:
        logger.debug("No .env file found. Using environment variables from the system.")


def _config_path(path=None) -> Optional[Path]:
    if path:
        return Path(path)
    if os.environ.get(CONFIG_ENV_VAR):
        return Path(os.environ[CONFIG_ENV_VAR])
    if DEFAULT_CONFIG_PATH.exists():
        return DEFAULT_CONFIG_PATH
    return None


def _convert(key: str, value):
    if value is None:
        return None
    if key in _INT_KEYS:
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {value!r}")
        if key in _NONNEGATIVE_KEYS and number < 0:
            raise ConfigError(f"{key} must be nonnegative, got {number}")
        if key == "workers" and number < 1:
            raise ConfigError(f"workers must be at least 1, got {number}")
        return number
    if key in ("mu", "nu"):
        try:
            Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{key} must be a rational number such as 3/2, got {value!r}")
        return str(value).strip()
    if key == "log_level":
        level = str(value).strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigError(f"Unknown log level: {value}")
        return level
    return str(value).strip().lower()


def load_settings(path=None, **overrides) -> Settings:
    """
    Read the optional key = value config file and apply overrides on top of it.

    Args:
        path: The config file; defaults to $SLQ_CONFIG, then ./slq.conf
        overrides: Values taking precedence over the file (None values are ignored)

    Returns:
        The resolved settings

    Raises:
        ConfigError: when the file is missing or a value is malformed
    """
    known = {field.name for field in fields(Settings)}
    values = {}
    config_path = _config_path(path)
    if config_path is not None:
        if not config_path.exists():
            raise ConfigError(f"Config file not found: {config_path}")
        logger.info(f"Loading settings from {config_path}")
        for key, value in dotenv_values(config_path).items():
            key = key.strip().lower()
            if key not in known:
                logger.warning(f"Ignoring unknown config key: {key}")
                continue
            values[key] = _convert(key, value)
    if os.environ.get("LOG_LEVEL") and "log_level" not in values:
        values["log_level"] = _convert("log_level", os.environ["LOG_LEVEL"])
    for key, value in overrides.items():
        if key not in known:
            raise ConfigError(f"Unknown setting: {key}")
        if value is not None:
            values[key] = _convert(key, value)
    settings = replace(Settings(), **{key: value for key, value in values.items() if value is not None})
    if settings.preset == "custom" and (settings.mu is None or settings.nu is None):
        raise ConfigError("the custom preset needs mu and nu")
    return settings
