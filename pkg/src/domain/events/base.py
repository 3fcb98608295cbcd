"""Base domain event class."""

from dataclasses import asdict, dataclass
from typing import Any, Dict


@dataclass
class DomainEvent:
    """
    Base class for all domain events.

    Events carry no ids or wall-clock timestamps: the run log they feed must be
    byte-identical across reruns with the same seed.
    """

    @property
    def event_type(self) -> str:
        """Get the event type name."""
        return self.__class__.__name__

    def to_dict(self) -> Dict[str, Any]:
        """Convert event payload to a dictionary."""
        return asdict(self)
