"""Noise commands."""

from src.application.features.noise.commands.inject_noise import InjectNoiseCommand

__all__ = ["InjectNoiseCommand"]
