"""KD-tree backed spatial index."""

import numpy as np
from scipy.spatial import cKDTree

from src.core.exceptions import ValidationError
from src.domain.entities.scene import Scene
from src.domain.interfaces.services import ISpatialIndex

# extra candidates fetched so distance ties at rank k can be ordered by id
TIE_SLACK = 8


class KDTreeSpatialIndex(ISpatialIndex):
    """
    Exact k-NN / radius queries over a fixed set of 3D positions.

    Neighbor lists are canonical: the query point comes first, the remaining
    ids follow by distance with ties broken by the lower id. The index is
    immutable after construction and safe for concurrent reads.
    """

    def __init__(self, positions: np.ndarray):
        positions = np.asarray(positions, dtype=np.float64)
        if positions.ndim != 2 or positions.shape[0] == 0:
            raise ValidationError("cannot index an empty point set", field="positions")
        self._positions = positions
        self._tree = cKDTree(positions)

    @property
    def point_count(self) -> int:
        return int(self._positions.shape[0])

    def knn(self, query_point_id: int, k: int) -> np.ndarray:
        self._check_point(query_point_id)
        ids, _ = self._knn_rows(np.array([query_point_id]), k)
        return ids[0]

    def knn_all(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        return self._knn_rows(np.arange(self.point_count), k)

    def radius(self, query_point_id: int, radius: float) -> np.ndarray:
        self._check_point(query_point_id)
        if radius < 0:
            raise ValidationError("radius must be non-negative", field="radius")
        found = self._tree.query_ball_point(self._positions[query_point_id], radius)
        return np.asarray(sorted(found), dtype=np.int64)

    def _knn_rows(self, rows: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
        n = self.point_count
        if not 1 <= k <= n:
            raise ValidationError(f"k must lie in [1, {n}], got {k}", field="k")

        fetch = min(n, k + TIE_SLACK)
        raw_dist, raw_ids = self._tree.query(self._positions[rows], k=fetch)
        raw_ids = np.asarray(raw_ids, dtype=np.int64).reshape(len(rows), fetch)
        raw_dist = np.asarray(raw_dist).reshape(len(rows), fetch)

        ids, dists = self._canonical(rows, raw_ids)
        ids, dists = ids[:, :k], dists[:, :k]

        # rows whose tie at rank k may continue past the fetched candidates
        has_self = (raw_ids == rows[:, None]).any(axis=1)
        overflow = ~has_self
        if fetch < n:
            overflow |= raw_dist[:, -1] <= raw_dist[:, k - 1]
        for r in np.flatnonzero(overflow):
            ids[r], dists[r] = self._exact_row(int(rows[r]), k, float(raw_dist[r, k - 1]))
        return ids, dists

    def _canonical(self, rows: np.ndarray, candidates: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        dists = np.linalg.norm(
            self._positions[candidates] - self._positions[rows][:, None, :], axis=-1
        )
        not_self = candidates != rows[:, None]
        order = np.lexsort((candidates, dists, not_self), axis=-1)
        return (
            np.take_along_axis(candidates, order, axis=-1),
            np.take_along_axis(dists, order, axis=-1),
        )

    def _exact_row(self, row: int, k: int, kth_distance: float) -> tuple[np.ndarray, np.ndarray]:
        reach = kth_distance * (1.0 + 1e-9) + 1e-12
        found = np.asarray(self._tree.query_ball_point(self._positions[row], reach), dtype=np.int64)
        found = np.union1d(found, [row])
        ids, dists = self._canonical(np.array([row]), found[None, :])
        return ids[0, :k], dists[0, :k]

    def _check_point(self, point_id: int) -> None:
        if not 0 <= point_id < self.point_count:
            raise ValidationError(f"point id {point_id} out of range", field="query_point_id")


def build_index(scene: Scene) -> KDTreeSpatialIndex:
    """Index a scene's positions for knn and radius queries."""
    if scene.point_count < 1:
        raise ValidationError("cannot index an empty scene", field="scene")
    return KDTreeSpatialIndex(scene.positions)


def knn(index: ISpatialIndex, query_point_id: int, k: int) -> np.ndarray:
    """Ordered ids of the k nearest points, the query point first."""
    return index.knn(query_point_id, k)
