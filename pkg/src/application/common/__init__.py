"""Common application utilities and base classes."""

from src.application.common.base_use_case import UseCase

__all__ = ["UseCase"]
