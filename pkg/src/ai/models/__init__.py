"""AI Models module - Feature builders and predictors."""

from src.ai.models.features import FEATURE_DIM, BlockBatch, batch_features, point_features
from src.ai.models.linear_predictor import LinearPredictor, default_predictor

__all__ = [
    "FEATURE_DIM",
    "BlockBatch",
    "LinearPredictor",
    "batch_features",
    "default_predictor",
    "point_features",
]
