"""Run configuration schema: one JSON document fully determines a run."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import orjson
from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from src.ai.training.config import TrainConfig
from src.core.config.constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_DBSCAN_EPS,
    DEFAULT_DBSCAN_MIN_PTS,
    ClusteringMethod,
    NoiseKind,
)
from src.core.exceptions import DataFormatError, StorageError, ValidationError
from src.domain.value_objects.noise_spec import NoiseSpec
from src.domain.value_objects.synth_spec import SynthSpec


class SynthSection(BaseModel):
    """Synthetic dataset generation."""

    model_config = ConfigDict(extra="forbid")

    scene_count: int = Field(default=1, ge=1, description="Number of scenes", examples=[50])
    seed: int = Field(default=0, ge=0, description="Root seed of the generator")
    room_extent: Tuple[float, float, float] = Field(
        default=(1.0, 0.5, 0.6), description="Room size in meters (x, y, z)"
    )
    class_count: int = Field(default=6, ge=2, description="Number of classes M")
    instances_per_class: int = Field(default=2, ge=1)
    points_per_instance: int = Field(default=3000, ge=1)
    color_noise: float = Field(default=0.002, ge=0.0, description="Stddev of color noise")
    contact: bool = Field(default=True, description="Place instances touching their support")
    cell_size: float = Field(default=0.25, gt=0.0, description="Floor grid cell in meters")

    def to_spec(self) -> SynthSpec:
        return SynthSpec(**self.model_dump(exclude={"scene_count"}))


class NoiseSection(BaseModel):
    """Label corruption applied by ``inject``."""

    model_config = ConfigDict(extra="forbid")

    kind: NoiseKind = Field(default=NoiseKind.SYMMETRIC, description="Noise model")
    tau: float = Field(default=0.0, ge=0.0, le=1.0, description="Instance flip rate")
    tau_pair: float = Field(default=0.0, ge=0.0, le=1.0, description="Within-pair flip rate")
    alpha: float = Field(default=0.0, ge=0.0, le=1.0, description="Share of noisy scenes")
    beta: float = Field(default=0.0, ge=0.0, le=1.0, description="Boundary noise level")
    pairs: List[Tuple[int, int]] = Field(
        default_factory=list, description="Disjoint class pairs", examples=[[[2, 3], [4, 5]]]
    )
    seed: int = Field(default=0, ge=0)

    def to_spec(self) -> NoiseSpec:
        data = self.model_dump()
        data["pairs"] = tuple(tuple(p) for p in self.pairs)
        return NoiseSpec(**data)


class ClusterSection(BaseModel):
    """Clustering used by the ``cluster`` subcommand."""

    model_config = ConfigDict(extra="forbid")

    method: ClusteringMethod = Field(default=ClusteringMethod.DBSCAN)
    eps: float = Field(default=DEFAULT_DBSCAN_EPS, gt=0.0)
    min_pts: int = Field(default=DEFAULT_DBSCAN_MIN_PTS, ge=1)
    block_size: float = Field(default=DEFAULT_BLOCK_SIZE, gt=0.0)


class PathsSection(BaseModel):
    """Input and output locations; flags override every entry."""

    model_config = ConfigDict(extra="forbid")

    input: Optional[Path] = Field(default=None, description="Input dataset or scene file")
    output: Optional[Path] = Field(default=None, description="Output directory")
    clean: Optional[Path] = Field(default=None, description="Clean reference dataset")
    test: Optional[Path] = Field(default=None, description="Labelled test dataset")
    predictions: Optional[Path] = Field(default=None, description="Predicted labels")
    ground_truth: Optional[Path] = Field(default=None, description="Ground-truth labels")


class RunConfig(BaseModel):
    """Every section a subcommand may read."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "synth": {"scene_count": 50, "seed": 7, "room_extent": [6.0, 6.0, 2.0]},
                "noise": {"kind": "symmetric", "tau": 0.6, "seed": 1},
                "train": {"pipeline": "pnal", "total_epochs": 30, "e_warmup": 5},
                "paths": {"input": "runs/noisy", "output": "runs/pnal"},
            }
        },
    )

    synth: SynthSection = Field(default_factory=SynthSection)
    noise: NoiseSection = Field(default_factory=NoiseSection)
    cluster: ClusterSection = Field(default_factory=ClusterSection)
    train: TrainConfig = Field(default_factory=TrainConfig)
    paths: PathsSection = Field(default_factory=PathsSection)

    def with_overrides(self, section: str, **values: Any) -> "RunConfig":
        """
        Copy with flag values merged into one section; ``None`` means unset.

        The merged section is validated again, so overrides obey the same
        rules as the file.
        """
        updates = {k: v for k, v in values.items() if v is not None}
        if not updates:
            return self
        current = getattr(self, section)
        merged = {**current.model_dump(), **updates}
        try:
            replacement = type(current).model_validate(merged)
        except PydanticValidationError as e:
            raise _config_error(e, section) from e
        return self.model_copy(update={section: replacement})


def load_run_config(path: Optional[Path] = None) -> RunConfig:
    """Parse then validate; no file is written before this succeeds."""
    if path is None:
        return RunConfig()
    path = Path(path)
    try:
        raw = orjson.loads(path.read_bytes())
    except FileNotFoundError as e:
        raise StorageError(message=f"Config file not found: {path}", path=str(path)) from e
    except OSError as e:
        raise StorageError(message=f"Failed to read config: {e}", path=str(path)) from e
    except orjson.JSONDecodeError as e:
        raise DataFormatError(message=f"Invalid config JSON: {e}", path=str(path)) from e
    if not isinstance(raw, dict):
        raise DataFormatError(message="config must be a JSON object", path=str(path))
    try:
        return RunConfig.model_validate(raw)
    except PydanticValidationError as e:
        raise _config_error(e, None) from e


def _config_error(error: PydanticValidationError, section: Optional[str]) -> ValidationError:
    problems: List[Dict[str, Any]] = [
        {
            "loc": ".".join(str(p) for p in ([section] if section else []) + list(err["loc"])),
            "msg": err["msg"],
        }
        for err in error.errors()
    ]
    first = problems[0]
    return ValidationError(
        f"invalid configuration at '{first['loc'] or section}': {first['msg']}",
        field=first["loc"] or section,
        errors=problems,
    )
