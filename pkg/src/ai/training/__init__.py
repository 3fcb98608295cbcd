"""AI Training module - Loss, configuration and the cleaning trainer."""

from src.ai.training.config import TrainConfig
from src.ai.training.loss import cross_entropy, masked_cross_entropy
from src.ai.training.trainer import NoiseCleaningTrainer, SceneTrack, prepare_tracks

__all__ = [
    "NoiseCleaningTrainer",
    "SceneTrack",
    "TrainConfig",
    "cross_entropy",
    "masked_cross_entropy",
    "prepare_tracks",
]
