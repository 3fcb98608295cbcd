"""Noise DTOs."""

from src.application.features.noise.dtos.noise_dtos import InjectNoiseInput, InjectNoiseOutput

__all__ = ["InjectNoiseInput", "InjectNoiseOutput"]
