"""Synthesis commands."""

from src.application.features.synthesis.commands.generate_dataset import GenerateDatasetCommand

__all__ = ["GenerateDatasetCommand"]
