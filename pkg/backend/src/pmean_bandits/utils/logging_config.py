"""
Centralized, per-component logging configuration for the simulator.
"""

import logging
import logging.handlers
import sys
from pathlib import Path

from .config import Settings, load_settings
from .exceptions import ConfigurationError

# Mapping from component name to filename
LOG_FILES = {
    "algorithms": "algorithms.log",
    "harness": "harness.log",
    "cli": "cli.log",
    "default": "pmean_bandits.log",
}

FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# --- State ---
_loggers: dict[str, logging.Logger] = {}


def _component_for(name: str) -> str:
    if "pmean_bandits.algorithms" in name:
        return "algorithms"
    if "pmean_bandits.harness" in name:
        return "harness"
    if "pmean_bandits.main" in name or "pmean_bandits.output" in name:
        return "cli"
    return "default"


def get_logger(name: str) -> logging.Logger:
    """
    Gets a configured logger instance for a part of the package.

    The dotted module name selects the component (algorithms, harness, cli,
    default). Console output goes to stderr so that result files written to
    stdout stay clean.

    Args:
        name: The name for the logger, typically __name__.

    Returns:
        A configured logger instance.
    """
    component_name = _component_for(name)

    if component_name in _loggers:
        return _loggers[component_name]

    try:
        settings = load_settings()
    except ConfigurationError:
        # bad values surface again where they are used
        settings = Settings()

    logger = logging.getLogger(f"pmean_bandits.{component_name}")
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    formatter = logging.Formatter(FORMAT, DATE_FORMAT)

    # --- Console Handler ---
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, settings.log_level))
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # --- File Handler ---
    if settings.log_dir:
        log_file_path = Path(settings.log_dir) / LOG_FILES[component_name]
        try:
            log_file_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_file_path, maxBytes=5 * 1024 * 1024, backupCount=3, encoding="utf-8"
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
            logger.debug(f"Logger '{component_name}' writing to {log_file_path}")
        except OSError as e:
            logger.warning(
                f"File logging disabled for '{component_name}' due to error: {e}"
            )

    _loggers[component_name] = logger

    return logger


def set_console_level(level: str) -> None:
    """Override the console level of every configured component logger."""
    numeric = getattr(logging, level.upper())
    for logger in _loggers.values():
        for handler in logger.handlers:
            if not isinstance(handler, logging.handlers.RotatingFileHandler):
                handler.setLevel(numeric)
