"""
Configuration package
"""

from .logging_setup import configure_logging, get_logger
from .settings import ForgeConfig
from .storage import Storage

__all__ = ["ForgeConfig", "Storage", "configure_logging", "get_logger"]
