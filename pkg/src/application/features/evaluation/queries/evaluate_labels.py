"""Evaluate labels query."""

from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from src.application.common.base_use_case import UseCase
from src.application.features.evaluation.dtos import EvaluateLabelsInput
from src.core.concurrency import parallel_map
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.domain.entities.metric_report import MetricReport
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.domain.services.boundary import extract_boundary
from src.domain.services.metrics import evaluate
from src.infrastructure.spatial import build_index
from src.infrastructure.storage import read_labelled_points

logger = get_logger(__name__)

# scene files store coordinates with six decimals
POSITION_TOLERANCE = 1e-5


class EvaluateLabelsQuery(UseCase[EvaluateLabelsInput, MetricReport]):
    """
    Score predicted labels against ground truth.

    OA@edge and OA@in use the band of the ground-truth labels. When the
    prediction file carries coordinates they must match the ground truth
    line by line, which catches reordered files.
    """

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: EvaluateLabelsInput) -> MetricReport:
        truth = self.repository.load_dataset(input_dto.ground_truth_path)
        gt = np.concatenate([s.require_labels() for s in truth])
        pred, positions = self._predictions(Path(input_dto.predictions_path))

        if pred.shape != gt.shape:
            raise ValidationError(
                f"predictions hold {pred.size} labels, ground truth has {gt.size} points",
                field="predictions",
            )
        if positions is not None:
            expected = np.concatenate([s.positions for s in truth])
            if not np.allclose(positions, expected, rtol=0.0, atol=POSITION_TOLERANCE):
                raise ValidationError(
                    "prediction points do not line up with ground-truth points",
                    field="predictions",
                )
        if pred.min() < 0:
            raise ValidationError("predicted labels must be non-negative", field="predictions")

        class_count = max(truth[0].class_count, int(pred.max()) + 1)
        bands = parallel_map(
            lambda scene: _band_mask(scene, input_dto.k_boundary), truth, input_dto.workers
        )
        report = evaluate(pred, gt, class_count, band=np.concatenate(bands))
        logger.info("labels_evaluated", points=int(gt.size), oa=round(report.oa, 6))
        return report

    def _predictions(self, path: Path) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        if path.is_dir() or path.suffix == ".json":
            scenes: List[Scene] = self.repository.load_dataset(path)
            return (
                np.concatenate([s.require_labels() for s in scenes]),
                np.concatenate([s.positions for s in scenes]),
            )
        return read_labelled_points(path)


def _band_mask(scene: Scene, k: int) -> np.ndarray:
    labels = scene.require_labels()
    return extract_boundary(labels, build_index(scene), min(k, scene.point_count)).mask()
