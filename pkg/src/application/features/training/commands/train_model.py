"""Train model command use case."""

from pathlib import Path
from typing import List

import numpy as np

from src.ai.pipelines import PipelineResult, run_pipeline
from src.application.common.base_use_case import UseCase
from src.application.features.training.dtos import TrainModelInput, TrainModelOutput
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.infrastructure.storage import JsonLinesWriter, write_json, write_lines

logger = get_logger(__name__)

REPORT_NAME = "report.json"
EPOCH_LOG_NAME = "epochs.jsonl"
CLEANED_DIR = "cleaned"
CORRECTIONS_DIR = "corrections"
BANDS_DIR = "bands"


class TrainModelCommand(UseCase[TrainModelInput, TrainModelOutput]):
    """Use case for running a pipeline and persisting everything it produced."""

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: TrainModelInput) -> TrainModelOutput:
        scenes = self.repository.load_dataset(input_dto.train_path)
        clean_labels = None
        if input_dto.clean_path is not None:
            reference = self.repository.load_dataset(input_dto.clean_path)
            clean_labels = _matched_labels(scenes, reference)
        test_scenes = None
        if input_dto.test_path is not None:
            test_scenes = self.repository.load_dataset(input_dto.test_path)

        result = run_pipeline(
            input_dto.config,
            scenes,
            clean_labels=clean_labels,
            test_scenes=test_scenes,
            workers=input_dto.workers,
        )
        return self._persist(result, scenes, input_dto)

    def _persist(
        self, result: PipelineResult, scenes: List[Scene], input_dto: TrainModelInput
    ) -> TrainModelOutput:
        out = Path(input_dto.output_dir)
        epochs_path = out / EPOCH_LOG_NAME
        with JsonLinesWriter(epochs_path) as writer:
            for event in result.epochs:
                writer.write(event.to_dict())

        cleaned = [s.with_labels(labels) for s, labels in zip(scenes, result.cleaned_labels)]
        manifest = self.repository.save_dataset(
            cleaned,
            out / CLEANED_DIR,
            metadata={
                "pipeline": result.report_dict()["pipeline"],
                "seed": input_dto.config.seed,
                "source": str(input_dto.train_path),
                "replaced_points": int(sum(int(r.sum()) for r in result.replaced)),
            },
        )
        for scene in scenes:
            lines = result.corrections.get(scene.name, [])
            write_lines(out / CORRECTIONS_DIR / f"{scene.name}.log", lines)
        for name, lines in result.bands.items():
            write_lines(out / BANDS_DIR / f"{name}.txt", lines)

        report = result.report_dict()
        report_path = write_json(out / REPORT_NAME, report)
        logger.info("training_artifacts_written", output_dir=str(out), epochs=len(result.epochs))
        return TrainModelOutput(
            report_path=report_path,
            epochs_path=epochs_path,
            cleaned_manifest=manifest,
            report=report,
        )


def _matched_labels(scenes: List[Scene], reference: List[Scene]) -> List[np.ndarray]:
    """Clean labels of ``reference``, which must list the training scenes in order."""
    if len(reference) != len(scenes):
        raise ValidationError(
            f"clean reference has {len(reference)} scenes, training set has {len(scenes)}",
            field="clean_path",
        )
    labels = []
    for scene, clean in zip(scenes, reference):
        if clean.name != scene.name or clean.point_count != scene.point_count:
            raise ValidationError(
                f"clean reference scene '{clean.name}' ({clean.point_count} points) does not "
                f"match training scene '{scene.name}' ({scene.point_count} points)",
                field="clean_path",
            )
        labels.append(clean.require_labels())
    return labels
