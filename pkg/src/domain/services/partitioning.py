"""Room-block partitioning and per-block point sampling."""

import math
from typing import List

import numpy as np

from src.core.config.constants import (
    DEFAULT_BLOCK_POINTS,
    DEFAULT_BLOCK_SIZE,
    DEFAULT_BLOCK_STRIDE,
)
from src.core.exceptions import ValidationError
from src.domain.entities.scene import Scene, SceneBlock


def window_origins(lo: float, hi: float, block_size: float, stride: float) -> np.ndarray:
    """Origins of half-open windows [o, o + size) covering [lo, hi] on one axis."""
    span = hi - lo
    if span < block_size:
        count = 1
    else:
        count = int(math.floor((span - block_size) / stride)) + 2
        # floating error in the division must never leave hi uncovered
        while lo + (count - 2) * stride + block_size > hi and count > 1:
            count -= 1
        while lo + (count - 1) * stride + block_size <= hi:
            count += 1
    return lo + stride * np.arange(count)


def block_partition(
    scene: Scene,
    block_size: float = DEFAULT_BLOCK_SIZE,
    stride: float = DEFAULT_BLOCK_STRIDE,
) -> List[SceneBlock]:
    """
    Sliding xy windows over a scene; z is never split.

    Every point lands in at least one block, empty windows are dropped and
    blocks are ordered by (x origin, y origin).
    """
    if block_size <= 0:
        raise ValidationError("block_size must be positive", field="block_size")
    if not 0 < stride <= block_size:
        raise ValidationError("stride must lie in (0, block_size]", field="stride")

    xy = scene.positions[:, :2]
    lo = xy.min(axis=0)
    hi = xy.max(axis=0)
    x_origins = window_origins(float(lo[0]), float(hi[0]), block_size, stride)
    y_origins = window_origins(float(lo[1]), float(hi[1]), block_size, stride)

    blocks: List[SceneBlock] = []
    for x0 in x_origins:
        in_x = (xy[:, 0] >= x0) & (xy[:, 0] < x0 + block_size)
        if not in_x.any():
            continue
        for y0 in y_origins:
            inside = in_x & (xy[:, 1] >= y0) & (xy[:, 1] < y0 + block_size)
            if inside.any():
                blocks.append(
                    SceneBlock(
                        scene=scene,
                        point_ids=np.flatnonzero(inside),
                        origin=(float(x0), float(y0)),
                        size=block_size,
                    )
                )
    return blocks


def sample_block(block: SceneBlock, n: int = DEFAULT_BLOCK_POINTS, seed: int = 0) -> np.ndarray:
    """
    Exactly ``n`` member ids of a block.

    Drawn without replacement when the block holds at least ``n`` points and
    with replacement otherwise; a pure function of (block, n, seed).
    """
    if n <= 0:
        raise ValidationError("sample size must be positive", field="n")
    if block.point_count == 0:
        raise ValidationError("cannot sample an empty block", field="block")
    rng = np.random.default_rng(seed)
    replace = block.point_count < n
    return rng.choice(block.point_ids, size=n, replace=replace)
