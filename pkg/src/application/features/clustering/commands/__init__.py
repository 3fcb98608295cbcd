"""Clustering commands."""

from src.application.features.clustering.commands.cluster_scenes import ClusterScenesCommand

__all__ = ["ClusterScenesCommand"]
