"""Synthetic scene specification value object."""

from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Tuple

from src.core.exceptions import ValidationError


@dataclass(frozen=True)
class SynthSpec:
    """
    Layout of a generated room.

    The room floor is a grid of ``cell_size`` cells. Class 0 instances are
    floor patches splitting the grid between them, class 1 instances are wall
    panels when ``class_count >= 3``, every other class is a furniture-like
    box. Each box occupies its own cell.

    The defaults describe a desk-scale room sampled at roughly 15k points per
    square meter with low color noise, dense enough for DBSCAN at its default
    radius to recover whole surfaces instead of singletons.
    """

    seed: int = 0
    room_extent: Tuple[float, float, float] = (1.0, 0.5, 0.6)
    class_count: int = 6
    instances_per_class: int = 2
    points_per_instance: int = 3000
    color_noise: float = 0.002
    contact: bool = True
    cell_size: float = 0.25

    def __post_init__(self) -> None:
        extent = tuple(float(v) for v in self.room_extent)
        if len(extent) != 3 or min(extent) <= 0:
            raise ValidationError("room extents must be three positive lengths", field="room_extent")
        object.__setattr__(self, "room_extent", extent)
        if self.class_count < 2:
            raise ValidationError("class_count must be at least 2", field="class_count")
        if self.instances_per_class < 1:
            raise ValidationError("instances_per_class must be positive", field="instances_per_class")
        if self.points_per_instance < 1:
            raise ValidationError("points_per_instance must be positive", field="points_per_instance")
        if self.color_noise < 0:
            raise ValidationError("color_noise must be non-negative", field="color_noise")
        if self.cell_size <= 0:
            raise ValidationError("cell_size must be positive", field="cell_size")
        if self.seed < 0:
            raise ValidationError("seed must be non-negative", field="seed")

    @property
    def instance_count(self) -> int:
        return self.class_count * self.instances_per_class

    @property
    def point_count(self) -> int:
        return self.instance_count * self.points_per_instance

    def with_seed(self, seed: int) -> "SynthSpec":
        return replace(self, seed=seed)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["room_extent"] = list(self.room_extent)
        return data
