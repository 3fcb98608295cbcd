"""Domain entities - Core data objects."""

from src.domain.entities.boundary_band import BoundaryBand
from src.domain.entities.cleaning_state import CleaningState, LabelCorrection
from src.domain.entities.cluster_set import ClusterSet, cluster_members
from src.domain.entities.metric_report import MetricReport
from src.domain.entities.prediction_history import PredictionHistory
from src.domain.entities.scene import Scene, SceneBlock

__all__ = [
    "BoundaryBand",
    "CleaningState",
    "ClusterSet",
    "LabelCorrection",
    "MetricReport",
    "PredictionHistory",
    "Scene",
    "SceneBlock",
    "cluster_members",
]
