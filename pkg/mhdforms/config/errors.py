"""Configuration errors."""

from __future__ import annotations


class ConfigError(RuntimeError):
    """Raised when configuration cannot be loaded or validated."""


__all__ = ["ConfigError"]
