"""Evaluation DTOs."""

from src.application.features.evaluation.dtos.evaluation_dtos import (
    DatasetStatsInput,
    DatasetStatsOutput,
    EvaluateLabelsInput,
)

__all__ = ["DatasetStatsInput", "DatasetStatsOutput", "EvaluateLabelsInput"]
