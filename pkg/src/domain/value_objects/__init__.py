"""Domain value objects."""

from src.domain.value_objects.noise_spec import NoiseSpec
from src.domain.value_objects.reliable_set import ReliableSet
from src.domain.value_objects.synth_spec import SynthSpec

__all__ = ["NoiseSpec", "ReliableSet", "SynthSpec"]
