"""``eval`` and ``stats`` subcommands."""

from pathlib import Path
from typing import Optional

import click

from src.application.features.evaluation.dtos import DatasetStatsInput, EvaluateLabelsInput
from src.application.features.evaluation.queries import DatasetStatsQuery, EvaluateLabelsQuery
from src.infrastructure.storage import write_json
from src.presentation.cli.dependencies import CliState, echo_json, get_repository, pass_state


@click.command("eval")
@click.option("-p", "--predictions", type=click.Path(path_type=Path), help="Predicted labels.")
@click.option("-g", "--ground-truth", type=click.Path(path_type=Path), help="Ground truth.")
@click.option("--k", "k_boundary", type=int, help="Neighbors for the boundary band.")
@click.option("--json-out", type=click.Path(path_type=Path), help="Also write the report here.")
@pass_state
def evaluate(
    state: CliState,
    predictions: Optional[Path],
    ground_truth: Optional[Path],
    k_boundary: Optional[int],
    json_out: Optional[Path],
) -> None:
    """Print OA, mIoU, OA@edge and OA@in as an aligned table."""
    report = EvaluateLabelsQuery(get_repository()).execute(
        EvaluateLabelsInput(
            predictions_path=state.required_path(predictions, "predictions"),
            ground_truth_path=state.required_path(ground_truth, "ground_truth"),
            k_boundary=k_boundary or state.config.train.k_boundary,
            workers=state.workers,
        )
    )
    rows = report.table_rows()
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        click.echo(f"{name.ljust(width)}  {value}")
    if json_out is not None:
        write_json(json_out, report.to_dict())


@click.command("stats")
@click.option("-i", "--input", "input_path", type=click.Path(path_type=Path), help="Dataset.")
@click.option("--clean", type=click.Path(path_type=Path), help="Clean copy for the noise rate.")
@click.option("--k", "k_boundary", type=int, help="Neighbors for the boundary band.")
@pass_state
def stats(
    state: CliState,
    input_path: Optional[Path],
    clean: Optional[Path],
    k_boundary: Optional[int],
) -> None:
    """Summarise points, classes, instances, noise and boundary share."""
    result = DatasetStatsQuery(get_repository()).execute(
        DatasetStatsInput(
            input_path=state.required_path(input_path, "input"),
            clean_path=state.optional_path(clean, "clean"),
            k_boundary=k_boundary or state.config.train.k_boundary,
            workers=state.workers,
        )
    )
    echo_json(result.to_dict())
