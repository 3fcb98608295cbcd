"""Synthesis DTOs."""

from src.application.features.synthesis.dtos.synthesis_dtos import (
    GenerateDatasetInput,
    GenerateDatasetOutput,
)

__all__ = ["GenerateDatasetInput", "GenerateDatasetOutput"]
