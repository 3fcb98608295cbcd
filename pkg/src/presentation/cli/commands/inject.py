"""``inject`` subcommand."""

from pathlib import Path
from typing import Optional, Tuple

import click

from src.application.features.noise.commands import InjectNoiseCommand
from src.application.features.noise.dtos import InjectNoiseInput
from src.core.config.constants import NoiseKind
from src.presentation.cli.dependencies import CliState, echo_json, get_repository, pass_state


@click.command("inject")
@click.option("-i", "--input", "input_path", type=click.Path(path_type=Path), help="Clean dataset.")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Output directory.")
@click.option("--kind", type=click.Choice([k.value for k in NoiseKind]), help="Noise model.")
@click.option("--tau", type=float, help="Instance flip rate.")
@click.option("--tau-pair", type=float, help="Within-pair flip rate.")
@click.option("--alpha", type=float, help="Share of scenes given boundary noise.")
@click.option("--beta", type=float, help="Boundary noise level.")
@click.option("--pair", "pairs", type=(int, int), multiple=True, help="Class pair, repeatable.")
@click.option("--seed", type=int, help="Noise seed.")
@pass_state
def inject(
    state: CliState,
    input_path: Optional[Path],
    output: Optional[Path],
    pairs: Tuple[Tuple[int, int], ...],
    **overrides: object,
) -> None:
    """Write a corrupted copy of a labelled dataset and a noise report."""
    section = state.config.with_overrides(
        "noise", pairs=[list(p) for p in pairs] or None, **overrides
    ).noise
    spec = section.to_spec()
    result = InjectNoiseCommand(get_repository()).execute(
        InjectNoiseInput(
            input_path=state.required_path(input_path, "input"),
            output_dir=state.output_dir(output, "noisy"),
            spec=spec,
            workers=state.workers,
        )
    )
    echo_json(
        {
            "manifest": str(result.manifest_path),
            "report": str(result.report_path),
            "kind": spec.kind.value,
            "requested_rate": result.requested_rate,
            "measured_rate": result.measured_rate,
            "flipped_points": result.flipped_points,
        }
    )
