"""CLI subcommands."""

from src.presentation.cli.commands.cluster import cluster
from src.presentation.cli.commands.evaluate import evaluate, stats
from src.presentation.cli.commands.inject import inject
from src.presentation.cli.commands.synth import synth
from src.presentation.cli.commands.train import train

__all__ = ["cluster", "evaluate", "inject", "stats", "synth", "train"]
