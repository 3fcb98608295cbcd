"""Evaluation data transfer objects."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.core.config.constants import DEFAULT_BOUNDARY_K


@dataclass(frozen=True)
class EvaluateLabelsInput:
    """
    Input DTO for scoring predicted labels against ground truth.

    Either path may name a dataset (manifest or its directory) or a single
    file; labels align with ground-truth points by line order.
    """

    predictions_path: Path
    ground_truth_path: Path
    k_boundary: int = DEFAULT_BOUNDARY_K
    workers: int = 1


@dataclass(frozen=True)
class DatasetStatsInput:
    """Input DTO for summarising a dataset."""

    input_path: Path
    clean_path: Optional[Path] = None
    k_boundary: int = DEFAULT_BOUNDARY_K
    workers: int = 1


@dataclass
class DatasetStatsOutput:
    """Output DTO with dataset-wide and per-scene statistics."""

    scene_count: int
    point_count: int
    class_count: int
    class_histogram: List[int]
    instance_count: Optional[int]
    noise_rate: Optional[float]
    boundary_fraction: Optional[float]
    scenes: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scene_count": self.scene_count,
            "point_count": self.point_count,
            "class_count": self.class_count,
            "class_histogram": self.class_histogram,
            "instance_count": self.instance_count,
            "noise_rate": self.noise_rate,
            "boundary_fraction": self.boundary_fraction,
            "scenes": self.scenes,
        }
