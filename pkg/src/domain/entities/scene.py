"""Scene entity: one scanned room as a labelled point cloud."""

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from src.core.exceptions import ValidationError


@dataclass(frozen=True, eq=False)
class Scene:
    """
    N points with positions, colors and optional class labels / instance ids.

    Arrays are copied to read-only numpy arrays on construction, so a Scene can
    be shared between worker threads. Use :meth:`with_labels` to derive a scene
    carrying different labels.
    """

    positions: np.ndarray
    colors: np.ndarray
    class_count: int
    labels: Optional[np.ndarray] = None
    instance_ids: Optional[np.ndarray] = None
    name: str = "scene"

    def __post_init__(self) -> None:
        positions = np.array(self.positions, dtype=np.float64)
        colors = np.array(self.colors, dtype=np.float64)

        if positions.ndim != 2 or positions.shape[1] != 3:
            raise ValidationError("positions must be an N x 3 array", field="positions")
        n = positions.shape[0]
        if n < 1:
            raise ValidationError("a scene needs at least one point", field="positions")
        if colors.shape != (n, 3):
            raise ValidationError("colors must be an N x 3 array", field="colors")
        if np.any(colors < 0.0) or np.any(colors > 1.0):
            raise ValidationError("color components must lie in [0, 1]", field="colors")
        if self.class_count < 2:
            raise ValidationError("class_count must be at least 2", field="class_count")

        object.__setattr__(self, "positions", _frozen(positions))
        object.__setattr__(self, "colors", _frozen(colors))

        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=np.int64)
            if labels.shape != (n,):
                raise ValidationError("labels must have one entry per point", field="labels")
            if labels.size and (labels.min() < 0 or labels.max() >= self.class_count):
                raise ValidationError(
                    f"labels must lie in [0, {self.class_count - 1}]", field="labels"
                )
            object.__setattr__(self, "labels", _frozen(labels))

        if self.instance_ids is not None:
            instance_ids = np.asarray(self.instance_ids, dtype=np.int64)
            if instance_ids.shape != (n,):
                raise ValidationError(
                    "instance_ids must have one entry per point", field="instance_ids"
                )
            object.__setattr__(self, "instance_ids", _frozen(instance_ids))

    @property
    def point_count(self) -> int:
        return int(self.positions.shape[0])

    @property
    def has_labels(self) -> bool:
        return self.labels is not None

    @property
    def has_instances(self) -> bool:
        return self.instance_ids is not None

    @property
    def present_classes(self) -> np.ndarray:
        """Sorted class ids that occur in the labels."""
        return np.unique(self.require_labels())

    def require_labels(self) -> np.ndarray:
        if self.labels is None:
            raise ValidationError(f"scene '{self.name}' has no labels", field="labels")
        return self.labels

    def require_instances(self) -> np.ndarray:
        if self.instance_ids is None:
            raise ValidationError(
                f"scene '{self.name}' has no instance ids", field="instance_ids"
            )
        return self.instance_ids

    def with_labels(self, labels: np.ndarray) -> "Scene":
        """Return a copy of this scene carrying ``labels``."""
        return replace(self, labels=np.asarray(labels, dtype=np.int64))

    def without_labels(self) -> "Scene":
        return replace(self, labels=None)


@dataclass(frozen=True, eq=False)
class SceneBlock:
    """A square xy window of a scene (z is never split)."""

    scene: Scene
    point_ids: np.ndarray
    origin: tuple[float, float]
    size: float = field(default=1.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "point_ids", _frozen(np.asarray(self.point_ids, dtype=np.int64)))

    @property
    def point_count(self) -> int:
        return int(self.point_ids.shape[0])

    def contains(self, point_id: int) -> bool:
        """True when the point's xy position lies inside this block's footprint."""
        x, y = self.scene.positions[point_id, :2]
        x0, y0 = self.origin
        return bool(x0 <= x < x0 + self.size and y0 <= y < y0 + self.size)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array
