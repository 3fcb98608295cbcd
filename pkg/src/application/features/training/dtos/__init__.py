"""Training DTOs."""

from src.application.features.training.dtos.training_dtos import (
    TrainModelInput,
    TrainModelOutput,
)

__all__ = ["TrainModelInput", "TrainModelOutput"]
