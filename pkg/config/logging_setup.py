"""
Logging Setup
JSON log records on stderr; command output stays on stdout
"""

import logging
import sys

from pythonjsonlogger.json import JsonFormatter

from config.settings import ForgeConfig

ROOT_LOGGER = "crystal_forge"

_configured = False


def configure_logging(level=None, fmt=None):
    """
    Install the handler on the package root logger

    Args:
        level (str, optional): logging level name, defaults to ForgeConfig.LOG_LEVEL
        fmt (str, optional): "json" or "plain", defaults to ForgeConfig.LOG_FORMAT
    """
    global _configured

    root = logging.getLogger(ROOT_LOGGER)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    if (fmt or ForgeConfig.LOG_FORMAT) == "plain":
        handler.setFormatter(
            logging.Formatter("%(levelname)s %(name)s: %(message)s")
        )
    else:
        handler.setFormatter(
            JsonFormatter(
                "%(asctime)s %(levelname)s %(name)s %(message)s",
                rename_fields={"levelname": "level", "name": "logger"},
            )
        )

    root.addHandler(handler)
    root.setLevel((level or ForgeConfig.LOG_LEVEL).upper())
    root.propagate = False
    _configured = True


def get_logger(name):
    """
    Get a logger below the package root

    Args:
        name (str): usually __name__ of the calling module

    Returns:
        logging.Logger
    """
    if not _configured:
        configure_logging()
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
