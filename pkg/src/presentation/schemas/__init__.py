"""Pydantic schemas for the run configuration file."""

from src.presentation.schemas.run_config import (
    ClusterSection,
    NoiseSection,
    PathsSection,
    RunConfig,
    SynthSection,
    load_run_config,
)

__all__ = [
    "ClusterSection",
    "NoiseSection",
    "PathsSection",
    "RunConfig",
    "SynthSection",
    "load_run_config",
]
