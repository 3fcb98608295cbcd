"""Presentation layer - Command-line interface and run configuration schemas."""
