"""Application module - command-line entry point."""

from src.app.main import main, run

__all__ = ["main", "run"]
