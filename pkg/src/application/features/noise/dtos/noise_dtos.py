"""Noise injection data transfer objects."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

from src.domain.value_objects.noise_spec import NoiseSpec


@dataclass(frozen=True)
class InjectNoiseInput:
    """Input DTO for corrupting a dataset."""

    input_path: Path
    output_dir: Path
    spec: NoiseSpec
    workers: int = 1


@dataclass
class InjectNoiseOutput:
    """Output DTO for noise injection."""

    manifest_path: Path
    report_path: Path
    requested_rate: float
    measured_rate: float
    flipped_points: int
    scenes: List[Dict[str, Any]] = field(default_factory=list)
