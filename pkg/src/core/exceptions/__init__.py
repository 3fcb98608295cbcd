"""Custom exceptions for the application."""

from src.core.exceptions.base import (
    CloudCleanException,
    DataFormatError,
    EntityNotFoundError,
    NoiseInjectionError,
    StaleStateError,
    StorageError,
    ValidationError,
)

__all__ = [
    "CloudCleanException",
    "DataFormatError",
    "EntityNotFoundError",
    "NoiseInjectionError",
    "StaleStateError",
    "StorageError",
    "ValidationError",
]
