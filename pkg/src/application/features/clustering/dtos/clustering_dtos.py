"""Clustering data transfer objects."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

from src.core.config.constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_DBSCAN_EPS,
    DEFAULT_DBSCAN_MIN_PTS,
    ClusteringMethod,
)


@dataclass(frozen=True)
class ClusterScenesInput:
    """Input DTO for clustering every scene of a dataset."""

    input_path: Path
    output_dir: Path
    method: ClusteringMethod = ClusteringMethod.DBSCAN
    eps: float = DEFAULT_DBSCAN_EPS
    min_pts: int = DEFAULT_DBSCAN_MIN_PTS
    block_size: float = DEFAULT_BLOCK_SIZE
    workers: int = 1


@dataclass
class ClusterScenesOutput:
    """Output DTO: one summary entry per scene."""

    summary_path: Path
    scenes: List[Dict[str, Any]] = field(default_factory=list)
