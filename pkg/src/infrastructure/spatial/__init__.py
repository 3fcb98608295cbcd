"""Spatial indexing."""

from src.infrastructure.spatial.kdtree_index import KDTreeSpatialIndex, build_index, knn

__all__ = ["KDTreeSpatialIndex", "build_index", "knn"]
