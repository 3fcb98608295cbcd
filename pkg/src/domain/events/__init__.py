"""Domain events - Records emitted while training and cleaning."""

from src.domain.events.base import DomainEvent
from src.domain.events.training_events import BandExtracted, EpochCompleted, LabelsCorrected

__all__ = [
    "BandExtracted",
    "DomainEvent",
    "EpochCompleted",
    "LabelsCorrected",
]
