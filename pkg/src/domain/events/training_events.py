"""Training and cleaning domain events."""

from dataclasses import dataclass, field
from typing import List, Optional

from src.domain.events.base import DomainEvent


@dataclass
class EpochCompleted(DomainEvent):
    """Raised after every training epoch; one line of the metrics log."""

    epoch: int = 0
    phase: str = ""
    loss: float = 0.0
    replaced_fraction: float = 0.0
    true_correction_fraction: Optional[float] = None
    train_oa: Optional[float] = None
    band_fraction: Optional[float] = None


@dataclass
class LabelsCorrected(DomainEvent):
    """Raised when a scene's clusters are overwritten by winner labels."""

    epoch: int = 0
    scene: str = ""
    lines: List[str] = field(default_factory=list)


@dataclass
class BandExtracted(DomainEvent):
    """Raised when a boundary band is (re)computed for a scene."""

    epoch: int = 0
    scene: str = ""
    lines: List[str] = field(default_factory=list)
