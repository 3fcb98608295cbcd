"""Core module - Configuration, logging, seeds and shared utilities."""

from src.core.config.settings import settings

__all__ = ["settings"]
