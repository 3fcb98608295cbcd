"""Training data transfer objects."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from src.ai.training.config import TrainConfig


@dataclass(frozen=True)
class TrainModelInput:
    """
    Input DTO for a training run.

    ``train_path`` holds the noisy training labels. ``clean_path`` is an
    optional clean copy of the same scenes, in the same order, used only for
    correction statistics; ``test_path`` is an optional labelled test set.
    """

    train_path: Path
    output_dir: Path
    config: TrainConfig
    clean_path: Optional[Path] = None
    test_path: Optional[Path] = None
    workers: int = 1


@dataclass
class TrainModelOutput:
    """Output DTO for a training run."""

    report_path: Path
    epochs_path: Path
    cleaned_manifest: Path
    report: Dict[str, Any] = field(default_factory=dict)
