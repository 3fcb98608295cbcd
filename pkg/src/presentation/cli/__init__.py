"""Click command-line interface."""

from src.presentation.cli.app import cli

__all__ = ["cli"]
