"""Dataset statistics query."""

from typing import Any, Dict, List, Optional

import numpy as np

from src.application.common.base_use_case import UseCase
from src.application.features.evaluation.dtos import DatasetStatsInput, DatasetStatsOutput
from src.core.concurrency import parallel_map
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.domain.services.boundary import extract_boundary
from src.infrastructure.spatial import build_index

logger = get_logger(__name__)


class DatasetStatsQuery(UseCase[DatasetStatsInput, DatasetStatsOutput]):
    """Use case for summarising a dataset, optionally against its clean copy."""

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: DatasetStatsInput) -> DatasetStatsOutput:
        scenes = self.repository.load_dataset(input_dto.input_path)
        clean: Optional[List[Scene]] = None
        if input_dto.clean_path is not None:
            clean = self.repository.load_dataset(input_dto.clean_path)
            if [(s.name, s.point_count) for s in clean] != [
                (s.name, s.point_count) for s in scenes
            ]:
                raise ValidationError(
                    "clean reference does not list the same scenes", field="clean_path"
                )

        class_count = scenes[0].class_count
        entries = parallel_map(
            lambda scene: _scene_stats(scene, input_dto.k_boundary), scenes, input_dto.workers
        )
        if clean is not None:
            for entry, scene, reference in zip(entries, scenes, clean):
                entry["noisy_points"] = int(
                    (scene.require_labels() != reference.require_labels()).sum()
                )

        points = sum(s.point_count for s in scenes)
        histogram = np.zeros(class_count, dtype=np.int64)
        for scene in scenes:
            if scene.has_labels:
                histogram += np.bincount(scene.labels, minlength=class_count)[:class_count]

        labelled = all(s.has_labels for s in scenes)
        instance_count = (
            sum(e["instances"] for e in entries) if all(s.has_instances for s in scenes) else None
        )
        output = DatasetStatsOutput(
            scene_count=len(scenes),
            point_count=points,
            class_count=class_count,
            class_histogram=histogram.tolist(),
            instance_count=instance_count,
            noise_rate=(
                _rate(sum(e["noisy_points"] for e in entries), points)
                if clean is not None
                else None
            ),
            boundary_fraction=(
                _rate(sum(e["band_points"] for e in entries), points) if labelled else None
            ),
            scenes=entries,
        )
        logger.info("dataset_summarised", scenes=len(scenes), points=points)
        return output


def _scene_stats(scene: Scene, k: int) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"scene": scene.name, "points": scene.point_count}
    if scene.has_instances:
        entry["instances"] = int(np.unique(scene.instance_ids).size)
    if scene.has_labels:
        band = extract_boundary(scene.labels, build_index(scene), min(k, scene.point_count))
        entry["classes_present"] = int(np.unique(scene.labels).size)
        entry["band_points"] = band.size
    return entry


def _rate(count: int, total: int) -> float:
    return round(count / total, 10)
