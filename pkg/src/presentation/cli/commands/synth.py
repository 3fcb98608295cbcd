"""``synth`` subcommand."""

from pathlib import Path
from typing import Optional

import click

from src.application.features.synthesis.commands import GenerateDatasetCommand
from src.application.features.synthesis.dtos import GenerateDatasetInput
from src.presentation.cli.dependencies import CliState, echo_json, get_repository, pass_state


@click.command("synth")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Output directory.")
@click.option("--count", "scene_count", type=int, help="Number of scenes.")
@click.option("--seed", type=int, help="Root seed.")
@click.option("--classes", "class_count", type=int, help="Class count M.")
@click.option("--instances", "instances_per_class", type=int, help="Instances per class.")
@click.option("--points", "points_per_instance", type=int, help="Points per instance.")
@click.option("--color-noise", type=float, help="Color noise stddev.")
@click.option("--contact/--no-contact", default=None, help="Place instances in contact.")
@pass_state
def synth(state: CliState, output: Optional[Path], **overrides: object) -> None:
    """Generate a synthetic labelled dataset with instance ids."""
    section = state.config.with_overrides("synth", **overrides).synth
    # build the spec before anything touches the disk
    spec = section.to_spec()
    result = GenerateDatasetCommand(get_repository()).execute(
        GenerateDatasetInput(
            spec=spec,
            scene_count=section.scene_count,
            seed=section.seed,
            output_dir=state.output_dir(output, "synth"),
            workers=state.workers,
        )
    )
    echo_json(
        {
            "manifest": str(result.manifest_path),
            "scenes": result.scene_count,
            "points": result.point_count,
        }
    )
