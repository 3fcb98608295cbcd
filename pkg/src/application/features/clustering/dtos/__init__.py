"""Clustering DTOs."""

from src.application.features.clustering.dtos.clustering_dtos import (
    ClusterScenesInput,
    ClusterScenesOutput,
)

__all__ = ["ClusterScenesInput", "ClusterScenesOutput"]
