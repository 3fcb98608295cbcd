"""Clusterers producing correction units."""

from src.core.config.constants import DEFAULT_BLOCK_SIZE, ClusteringMethod
from src.infrastructure.clustering.dbscan_clusterer import (
    DBSCANClusterer,
    block_tiles,
    clustering_features,
    dbscan,
)
from src.infrastructure.clustering.instance_clusterer import InstanceClusterer
from src.domain.interfaces.services import IClusterer


def get_clusterer(
    method: ClusteringMethod, eps: float, min_pts: int, block_size: float = DEFAULT_BLOCK_SIZE
) -> IClusterer:
    """Clusterer for a configured method."""
    if ClusteringMethod(method) is ClusteringMethod.INSTANCE:
        return InstanceClusterer()
    return DBSCANClusterer(eps=eps, min_pts=min_pts, block_size=block_size)


__all__ = [
    "DBSCANClusterer",
    "InstanceClusterer",
    "block_tiles",
    "clustering_features",
    "dbscan",
    "get_clusterer",
]
