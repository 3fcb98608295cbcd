"""Cluster scenes command use case."""

from typing import Any, Dict

import numpy as np

from src.application.common.base_use_case import UseCase
from src.application.features.clustering.dtos import ClusterScenesInput, ClusterScenesOutput
from src.core.concurrency import parallel_map
from src.core.config.constants import ClusteringMethod
from src.core.observability import get_logger
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.infrastructure.clustering import get_clusterer
from src.infrastructure.storage import write_json, write_lines

logger = get_logger(__name__)

SUMMARY_NAME = "clusters.json"
DUMP_DIR = "clusters"


class ClusterScenesCommand(UseCase[ClusterScenesInput, ClusterScenesOutput]):
    """Use case for writing ``point_id cluster_id`` dumps and a size summary."""

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: ClusterScenesInput) -> ClusterScenesOutput:
        clusterer = get_clusterer(
            input_dto.method, input_dto.eps, input_dto.min_pts, input_dto.block_size
        )
        scenes = self.repository.load_dataset(input_dto.input_path)
        cluster_sets = parallel_map(clusterer.cluster, scenes, input_dto.workers)

        entries = []
        for scene, clusters in zip(scenes, cluster_sets):
            write_lines(
                input_dto.output_dir / DUMP_DIR / f"{scene.name}.txt", clusters.to_dump_lines()
            )
            entries.append(_summary(scene, clusters.sizes()))

        summary = {
            "method": ClusteringMethod(input_dto.method).value,
            "eps": input_dto.eps,
            "min_pts": input_dto.min_pts,
            "block_size": input_dto.block_size,
            "scenes": entries,
        }
        path = write_json(input_dto.output_dir / SUMMARY_NAME, summary)
        logger.info(
            "scenes_clustered",
            scenes=len(scenes),
            clusters=sum(e["clusters"] for e in entries),
        )
        return ClusterScenesOutput(summary_path=path, scenes=entries)


def _summary(scene: Scene, sizes: np.ndarray) -> Dict[str, Any]:
    return {
        "scene": scene.name,
        "points": scene.point_count,
        "clusters": int(sizes.size),
        "singletons": int((sizes == 1).sum()),
        "largest": int(sizes.max()),
        "mean_size": round(float(sizes.mean()), 6),
    }
