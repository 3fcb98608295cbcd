"""Training commands."""

from src.application.features.training.commands.train_model import TrainModelCommand

__all__ = ["TrainModelCommand"]
