"""Utility modules for monocurve."""

from monocurve.utils.config import (
    Settings,
    clear_settings_cache,
    get_settings,
    get_templates_dir,
    save_config,
)
from monocurve.utils.errors import (
    ComputationRejected,
    InvariantViolation,
    MonocurveError,
    NotInIdealError,
    ParseError,
)
from monocurve.utils.logger import console, get_logger, setup_logging

__all__ = [
    "Settings",
    "get_settings",
    "get_templates_dir",
    "clear_settings_cache",
    "save_config",
    "get_logger",
    "setup_logging",
    "console",
    "MonocurveError",
    "ParseError",
    "ComputationRejected",
    "NotInIdealError",
    "InvariantViolation",
]
