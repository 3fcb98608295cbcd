"""Command group tying the subcommands together."""

from pathlib import Path
from typing import Optional

import click

from src.core.config.settings import get_settings
from src.presentation.cli.commands import cluster, evaluate, inject, stats, synth, train
from src.presentation.cli.dependencies import CliState
from src.presentation.schemas.run_config import load_run_config


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "-c",
    "--config",
    "config_path",
    type=click.Path(path_type=Path),
    help="JSON run configuration; flags override it.",
)
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default from env).")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path], workers: Optional[int]) -> None:
    """Noisy-label cleaning for labelled point clouds."""
    settings = get_settings()
    ctx.obj = CliState(
        config=load_run_config(config_path),
        settings=settings,
        workers=workers or settings.workers,
    )


for command in (synth, inject, cluster, train, evaluate, stats):
    cli.add_command(command)
