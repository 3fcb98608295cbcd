"""Synthesis data transfer objects."""

from dataclasses import dataclass
from pathlib import Path

from src.domain.value_objects.synth_spec import SynthSpec


@dataclass(frozen=True)
class GenerateDatasetInput:
    """Input DTO for generating a dataset."""

    spec: SynthSpec
    scene_count: int
    seed: int
    output_dir: Path
    workers: int = 1


@dataclass
class GenerateDatasetOutput:
    """Output DTO for dataset generation."""

    manifest_path: Path
    scene_count: int
    point_count: int
