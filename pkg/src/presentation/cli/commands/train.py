"""``train`` subcommand."""

from pathlib import Path
from typing import Optional

import click

from src.application.features.training.commands import TrainModelCommand
from src.application.features.training.dtos import TrainModelInput
from src.core.config.constants import ClusteringMethod, PipelineKind
from src.presentation.cli.dependencies import CliState, echo_json, get_repository, pass_state


def _warmup(value: Optional[str]) -> Optional[object]:
    if value is None or value == "auto":
        return value
    try:
        return int(value)
    except ValueError as e:
        raise click.BadParameter("expected an integer or 'auto'") from e


@click.command("train")
@click.option("-i", "--input", "input_path", type=click.Path(path_type=Path), help="Noisy set.")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Output directory.")
@click.option("--clean", type=click.Path(path_type=Path), help="Clean copy of the training set.")
@click.option("--test", type=click.Path(path_type=Path), help="Labelled test set.")
@click.option("--pipeline", type=click.Choice([p.value for p in PipelineKind]))
@click.option("--epochs", "total_epochs", type=int, help="Total epochs.")
@click.option("--warmup", "e_warmup", help="Warm-up epochs or 'auto'.")
@click.option("--boundary-epochs", type=int, help="Boundary epochs of the mixed pipeline.")
@click.option("--history", "history_length", type=int, help="Prediction history length q.")
@click.option("--sigma", type=float, help="Reliability threshold on normalized entropy.")
@click.option("--gamma", type=float, help="Voting relaxation, at least 1.")
@click.option("--k", "k_boundary", type=int, help="Neighbors for the boundary band.")
@click.option("--lr", "learning_rate", type=float, help="SGD learning rate.")
@click.option("--seed", type=int, help="Training seed.")
@click.option("--cluster-method", type=click.Choice([m.value for m in ClusteringMethod]))
@click.option("--eps", "eps_dbscan", type=float, help="DBSCAN radius.")
@click.option("--min-pts", type=int, help="DBSCAN core-point threshold.")
@click.option("--block-points", type=int, help="Points sampled per training block.")
@click.option("--batch-points", type=int, help="Points per SGD step within a block.")
@click.option("--freeze-band/--progressive-band", default=None)
@click.option("--pointwise/--voting", "pointwise_correction", default=None)
@click.option("--reset-history/--share-history", default=None)
@pass_state
def train(
    state: CliState,
    input_path: Optional[Path],
    output: Optional[Path],
    clean: Optional[Path],
    test: Optional[Path],
    e_warmup: Optional[str],
    **overrides: object,
) -> None:
    """Train on noisy labels, cleaning them, and write logs, labels and a report."""
    config = state.config.with_overrides("train", e_warmup=_warmup(e_warmup), **overrides).train
    result = TrainModelCommand(get_repository()).execute(
        TrainModelInput(
            train_path=state.required_path(input_path, "input"),
            output_dir=state.output_dir(output, "train"),
            config=config,
            clean_path=state.optional_path(clean, "clean"),
            test_path=state.optional_path(test, "test"),
            workers=state.workers,
        )
    )
    echo_json(result.report)
