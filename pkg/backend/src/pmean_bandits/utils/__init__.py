"""
Simulator utilities package.
"""

from .config import Settings, load_settings
from .logging_config import get_logger, set_console_level

__all__ = ["Settings", "get_logger", "load_settings", "set_console_level"]
