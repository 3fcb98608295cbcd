"""``cluster`` subcommand."""

from pathlib import Path
from typing import Optional

import click

from src.application.features.clustering.commands import ClusterScenesCommand
from src.application.features.clustering.dtos import ClusterScenesInput
from src.core.config.constants import ClusteringMethod
from src.presentation.cli.dependencies import CliState, echo_json, get_repository, pass_state


@click.command("cluster")
@click.option("-i", "--input", "input_path", type=click.Path(path_type=Path), help="Dataset.")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Output directory.")
@click.option("--method", type=click.Choice([m.value for m in ClusteringMethod]))
@click.option("--eps", type=float, help="DBSCAN radius in feature space.")
@click.option("--min-pts", type=int, help="DBSCAN core-point threshold.")
@click.option("--block-size", type=float, help="Side of the blocks clustered independently.")
@pass_state
def cluster(
    state: CliState, input_path: Optional[Path], output: Optional[Path], **overrides: object
) -> None:
    """Dump the correction units of every scene."""
    section = state.config.with_overrides("cluster", **overrides).cluster
    result = ClusterScenesCommand(get_repository()).execute(
        ClusterScenesInput(
            input_path=state.required_path(input_path, "input"),
            output_dir=state.output_dir(output, "clusters"),
            method=section.method,
            eps=section.eps,
            min_pts=section.min_pts,
            block_size=section.block_size,
            workers=state.workers,
        )
    )
    echo_json({"summary": str(result.summary_path), "scenes": result.scenes})
