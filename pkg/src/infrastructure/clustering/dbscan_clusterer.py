"""DBSCAN clustering over block-scaled position and color."""

import numpy as np
from sklearn.cluster import DBSCAN

from src.core.config.constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_DBSCAN_EPS,
    DEFAULT_DBSCAN_MIN_PTS,
)
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.domain.entities.cluster_set import ClusterSet
from src.domain.entities.scene import Scene
from src.domain.interfaces.services import IClusterer

logger = get_logger(__name__)


def block_tiles(scene: Scene, block_size: float = DEFAULT_BLOCK_SIZE) -> np.ndarray:
    """
    Per-point tile index of the non-overlapping xy grid anchored at the scene minimum.

    The grid is the block partition with stride equal to the block size.
    """
    xy = scene.positions[:, :2]
    cells = np.floor((xy - xy.min(axis=0)) / block_size).astype(np.int64)
    _, tiles = np.unique(cells, axis=0, return_inverse=True)
    return tiles.reshape(-1)


def clustering_features(scene: Scene, block_size: float = DEFAULT_BLOCK_SIZE) -> np.ndarray:
    """
    N x 6 feature: positions in the unit cube of their block, then colors.

    x and y are measured from the block origin and z from the scene floor, all
    divided by the block size, so ``eps`` is a fraction of one block whatever
    the room size.
    """
    positions = scene.positions
    lo = positions.min(axis=0)
    shifted = positions - lo
    origin = np.floor(shifted[:, :2] / block_size) * block_size
    scaled = np.column_stack([shifted[:, :2] - origin, shifted[:, 2]]) / block_size
    return np.hstack([scaled, scene.colors])


class DBSCANClusterer(IClusterer):
    """Density-based correction units, one DBSCAN per block; noise points become singletons."""

    def __init__(
        self,
        eps: float = DEFAULT_DBSCAN_EPS,
        min_pts: int = DEFAULT_DBSCAN_MIN_PTS,
        block_size: float = DEFAULT_BLOCK_SIZE,
    ):
        if eps <= 0:
            raise ValidationError("eps must be positive", field="eps")
        if min_pts < 1:
            raise ValidationError("min_pts must be at least 1", field="min_pts")
        if block_size <= 0:
            raise ValidationError("block_size must be positive", field="block_size")
        self.eps = eps
        self.min_pts = min_pts
        self.block_size = block_size

    def cluster(self, scene: Scene) -> ClusterSet:
        features = clustering_features(scene, self.block_size)
        tiles = block_tiles(scene, self.block_size)
        assignment = np.full(scene.point_count, -1, dtype=np.int64)
        offset = 0
        for tile in range(int(tiles.max()) + 1):
            members = np.flatnonzero(tiles == tile)
            # single-threaded: identical output for any worker count
            model = DBSCAN(eps=self.eps, min_samples=self.min_pts, metric="euclidean", n_jobs=1)
            local = model.fit_predict(features[members])
            grouped = local >= 0
            assignment[members[grouped]] = local[grouped] + offset
            offset += int(local.max(initial=-1)) + 1

        clusters = ClusterSet.from_assignment(assignment)
        logger.debug(
            "scene_clustered",
            scene=scene.name,
            blocks=int(tiles.max()) + 1,
            clusters=clusters.cluster_count,
            noise_points=int((assignment < 0).sum()),
        )
        return clusters


def dbscan(
    scene: Scene,
    eps: float = DEFAULT_DBSCAN_EPS,
    min_pts: int = DEFAULT_DBSCAN_MIN_PTS,
    block_size: float = DEFAULT_BLOCK_SIZE,
) -> ClusterSet:
    """Cluster one scene with DBSCAN."""
    return DBSCANClusterer(eps=eps, min_pts=min_pts, block_size=block_size).cluster(scene)
