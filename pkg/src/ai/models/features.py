"""Per-point input features for the default predictor."""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.core.config.constants import FEATURE_NEIGHBORS
from src.domain.entities.scene import Scene
from src.domain.interfaces.services import ISpatialIndex

# block-normalized xyz, rgb, z-height, mean 8-NN color
FEATURE_DIM = 10


def point_features(scene: Scene, index: ISpatialIndex) -> np.ndarray:
    """
    Block-independent part of the features: N x 7 ``[r, g, b, z_height, nn_r, nn_g, nn_b]``.

    ``z_height`` is z rescaled to [0, 1] over the scene; the neighbor color is
    the mean color of the nearest points, the point itself excluded.
    """
    z = scene.positions[:, 2]
    span = float(z.max() - z.min())
    z_height = (z - z.min()) / span if span > 0 else np.zeros_like(z)

    k = min(FEATURE_NEIGHBORS + 1, scene.point_count)
    if k > 1:
        neighbors, _ = index.knn_all(k)
        nn_color = scene.colors[neighbors[:, 1:]].mean(axis=1)
    else:
        nn_color = scene.colors
    return np.column_stack([scene.colors, z_height, nn_color])


@dataclass(frozen=True, eq=False)
class BlockBatch:
    """Point ids of one block of one scene, in fixed order."""

    scene_index: int
    point_ids: np.ndarray
    origin: Tuple[float, float]
    size: float


def split_batch(batch: BlockBatch, batch_points: int) -> List[BlockBatch]:
    """Consecutive slices of at most ``batch_points`` ids, keeping the block's point order."""
    ids = batch.point_ids
    return [
        BlockBatch(batch.scene_index, ids[start : start + batch_points], batch.origin, batch.size)
        for start in range(0, ids.shape[0], batch_points)
    ]


def batch_features(batch: BlockBatch, scene: Scene, static: np.ndarray) -> np.ndarray:
    """B x FEATURE_DIM features: xyz relative to the block corner, then the static part."""
    xyz = scene.positions[batch.point_ids]
    local = np.column_stack(
        [
            xyz[:, 0] - batch.origin[0],
            xyz[:, 1] - batch.origin[1],
            xyz[:, 2] - scene.positions[:, 2].min(),
        ]
    ) / batch.size
    return np.hstack([local, static[batch.point_ids]])


def stitch_predictions(
    batches: List[BlockBatch], predictions: List[np.ndarray], point_count: int
) -> np.ndarray:
    """Per-point labels from block predictions; later blocks overwrite earlier ones."""
    labels = np.full(point_count, -1, dtype=np.int64)
    for batch, predicted in zip(batches, predictions):
        labels[batch.point_ids] = predicted
    return labels
