"""Scene and predictor builders shared by the test suite."""

from typing import List, Optional

import numpy as np

from src.domain.entities.scene import Scene
from src.domain.interfaces.services import IPredictor
from src.domain.services.scene_synthesis import class_colors
from src.domain.value_objects.synth_spec import SynthSpec


def make_scene(
    positions: np.ndarray,
    labels: Optional[np.ndarray] = None,
    colors: Optional[np.ndarray] = None,
    instances: Optional[np.ndarray] = None,
    class_count: int = 2,
    name: str = "scene",
) -> Scene:
    positions = np.asarray(positions, dtype=np.float64)
    if colors is None:
        colors = np.full((positions.shape[0], 3), 0.5)
    return Scene(
        positions=positions,
        colors=colors,
        class_count=class_count,
        labels=labels,
        instance_ids=instances,
        name=name,
    )


def line_scene(left: int = 10, right: int = 10, spacing: float = 0.1) -> Scene:
    """Points on the x axis: ``left`` of class 0 followed by ``right`` of class 1."""
    n = left + right
    positions = np.column_stack([np.arange(n) * spacing, np.zeros(n), np.zeros(n)])
    labels = np.array([0] * left + [1] * right)
    return make_scene(positions, labels=labels, instances=labels.copy())


def blob(rng: np.random.Generator, center: tuple, count: int, spread: float = 0.01) -> np.ndarray:
    return np.asarray(center, dtype=np.float64) + rng.normal(0.0, spread, (count, 3))


def small_spec(**overrides: object) -> SynthSpec:
    """A room small enough for fast tests but with every surface kind."""
    values = dict(
        seed=3,
        room_extent=(3.0, 3.0, 2.0),
        class_count=4,
        instances_per_class=2,
        points_per_instance=80,
        color_noise=0.01,
        contact=True,
        cell_size=1.0,
    )
    values.update(overrides)
    return SynthSpec(**values)


class ColorOraclePredictor(IPredictor):
    """
    Predicts the class whose base color is nearest to the point color.

    Never learns; records how many rows each fit step saw under the mask.
    """

    def __init__(self, class_count: int):
        self.class_count = class_count
        self.palette = class_colors(class_count)
        self.masked_rows: List[int] = []

    def fit_step(self, features: np.ndarray, targets: np.ndarray, mask: np.ndarray) -> float:
        self.masked_rows.append(int(np.asarray(mask, dtype=bool).sum()))
        return 0.0

    def predict(self, features: np.ndarray) -> np.ndarray:
        rgb = features[:, 3:6]
        distance = np.linalg.norm(rgb[:, None, :] - self.palette[None, :, :], axis=-1)
        return np.eye(self.class_count)[distance.argmin(axis=1)]

    def state_fingerprint(self) -> bytes:
        return b""
