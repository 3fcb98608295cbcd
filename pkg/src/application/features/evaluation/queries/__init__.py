"""Evaluation queries."""

from src.application.features.evaluation.queries.dataset_stats import DatasetStatsQuery
from src.application.features.evaluation.queries.evaluate_labels import EvaluateLabelsQuery

__all__ = ["DatasetStatsQuery", "EvaluateLabelsQuery"]
