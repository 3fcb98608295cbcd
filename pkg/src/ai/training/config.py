"""Training configuration."""

import math
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.config.constants import (
    DEFAULT_BATCH_POINTS,
    DEFAULT_BLOCK_POINTS,
    DEFAULT_BLOCK_SIZE,
    DEFAULT_BLOCK_STRIDE,
    DEFAULT_BOUNDARY_EPOCHS,
    DEFAULT_BOUNDARY_K,
    DEFAULT_DBSCAN_EPS,
    DEFAULT_DBSCAN_MIN_PTS,
    DEFAULT_GAMMA,
    DEFAULT_HISTORY_LENGTH,
    DEFAULT_LEARNING_RATE,
    DEFAULT_SIGMA,
    DEFAULT_TOTAL_EPOCHS,
    DEFAULT_WARMUP_EPOCHS,
    ClusteringMethod,
    PipelineKind,
)


class TrainConfig(BaseModel):
    """
    Everything that determines a training run besides the data.

    ``e_warmup="auto"`` resolves to round(total_epochs / 6), which makes the
    warm-up a fifth of the cleaning stage, and never below the history length.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", use_enum_values=False)

    pipeline: PipelineKind = Field(default=PipelineKind.PNAL, description="Training pipeline")
    total_epochs: int = Field(default=DEFAULT_TOTAL_EPOCHS, ge=0)
    e_warmup: Union[int, Literal["auto"]] = Field(default=DEFAULT_WARMUP_EPOCHS)
    boundary_epochs: int = Field(
        default=DEFAULT_BOUNDARY_EPOCHS, ge=0, description="Boundary epochs after PNAL (mixed only)"
    )
    history_length: int = Field(default=DEFAULT_HISTORY_LENGTH, ge=1, description="q")
    sigma: float = Field(default=DEFAULT_SIGMA, ge=0.0, le=1.0)
    gamma: float = Field(default=DEFAULT_GAMMA, ge=1.0)
    k_boundary: int = Field(default=DEFAULT_BOUNDARY_K, ge=1)
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, ge=0.0)
    seed: int = Field(default=0, ge=0)

    cluster_method: ClusteringMethod = Field(default=ClusteringMethod.DBSCAN)
    eps_dbscan: float = Field(default=DEFAULT_DBSCAN_EPS, gt=0.0)
    min_pts: int = Field(default=DEFAULT_DBSCAN_MIN_PTS, ge=1)

    block_size: float = Field(default=DEFAULT_BLOCK_SIZE, gt=0.0)
    block_stride: float = Field(default=DEFAULT_BLOCK_STRIDE, gt=0.0)
    block_points: Optional[int] = Field(
        default=DEFAULT_BLOCK_POINTS,
        ge=1,
        description="Points sampled per training block; None trains on every member",
    )
    batch_points: int = Field(
        default=DEFAULT_BATCH_POINTS,
        ge=1,
        description="Points per SGD step; a training block is cut into slices of this size",
    )

    freeze_band: bool = Field(default=False, description="Reuse the first band (w/o progressive)")
    pointwise_correction: bool = Field(default=False, description="Correct points, not clusters")
    reset_history: bool = Field(default=False, description="Clear histories before boundary phase")
    mask_on_confirm: bool = Field(default=True, description="Confirmed labels join the loss mask")

    @model_validator(mode="after")
    def _check_schedule(self) -> "TrainConfig":
        if self.block_stride > self.block_size:
            raise ValueError("block_stride must not exceed block_size")
        if self.e_warmup != "auto" and self.pipeline is not PipelineKind.CE:
            if self.e_warmup < 0:
                raise ValueError("e_warmup must be non-negative")
            if self.e_warmup < self.history_length:
                raise ValueError(
                    f"e_warmup ({self.e_warmup}) must be at least the history length "
                    f"({self.history_length})"
                )
        if self.pipeline is not PipelineKind.CE and self.warmup_epochs > self.total_epochs:
            raise ValueError(
                f"warm-up of {self.warmup_epochs} epochs exceeds total_epochs={self.total_epochs}"
            )
        return self

    @property
    def warmup_epochs(self) -> int:
        if self.e_warmup == "auto":
            return max(self.history_length, int(math.floor(self.total_epochs / 6 + 0.5)))
        return int(self.e_warmup)

    @property
    def clean_epochs(self) -> int:
        return self.total_epochs - self.warmup_epochs
