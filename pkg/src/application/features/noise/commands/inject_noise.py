"""Inject noise command use case."""

from typing import Any, Dict, List, Optional

import numpy as np

from src.application.common.base_use_case import UseCase
from src.application.features.noise.dtos import InjectNoiseInput, InjectNoiseOutput
from src.core.concurrency import parallel_map
from src.core.config.constants import NoiseKind
from src.core.observability import get_logger
from src.core.randomness import derive_seed
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.domain.services.noise_injection import (
    apply_instance_noise,
    implied_unpaired_rate,
    inject_dataset_boundary,
    instance_catalog,
)
from src.domain.value_objects.noise_spec import NoiseSpec
from src.infrastructure.spatial import build_index
from src.infrastructure.storage import write_json

logger = get_logger(__name__)

REPORT_NAME = "noise_report.json"
BOUNDARY_KINDS = (NoiseKind.BOUNDARY, NoiseKind.MIXED_INSTANCE_BOUNDARY)


class InjectNoiseCommand(UseCase[InjectNoiseInput, InjectNoiseOutput]):
    """Use case for writing a corrupted copy of a dataset plus a noise report."""

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: InjectNoiseInput) -> InjectNoiseOutput:
        spec = input_dto.spec
        scenes = self.repository.load_dataset(input_dto.input_path)
        for scene in scenes:
            scene.require_labels()
            spec.validate_classes(scene.class_count)
            if spec.kind.needs_instances:
                scene.require_instances()

        noisy = [s.require_labels() for s in scenes]
        if spec.kind is not NoiseKind.BOUNDARY:
            noisy = self._instance_noise(scenes, spec, input_dto.workers)
        if spec.kind in BOUNDARY_KINDS:
            base = [s.with_labels(labels) for s, labels in zip(scenes, noisy)]
            indexes = parallel_map(build_index, base, input_dto.workers)
            noisy = inject_dataset_boundary(
                base, spec.alpha, spec.beta, derive_seed(spec.seed, "boundary"), indexes
            )

        report = self._report(scenes, noisy, spec)
        manifest = self.repository.save_dataset(
            [s.with_labels(labels) for s, labels in zip(scenes, noisy)],
            input_dto.output_dir,
            metadata={"noise": spec.to_dict(), "source": str(input_dto.input_path)},
        )
        report_path = write_json(input_dto.output_dir / REPORT_NAME, report)
        logger.info(
            "noise_injected",
            kind=spec.kind.value,
            requested=report["requested_rate"],
            measured=report["measured_rate"],
            flipped_points=report["flipped_points"],
        )
        return InjectNoiseOutput(
            manifest_path=manifest,
            report_path=report_path,
            requested_rate=report["requested_rate"],
            measured_rate=report["measured_rate"],
            flipped_points=report["flipped_points"],
            scenes=report["scenes"],
        )

    def _instance_noise(self, scenes: List[Scene], spec: NoiseSpec, workers: int) -> List[np.ndarray]:
        unpaired_rate: Optional[float] = None
        if spec.kind is NoiseKind.MIXED_ASYMMETRIC:
            # solved over the whole dataset so the expected overall rate is tau
            classes = np.concatenate([instance_catalog(s)[1] for s in scenes])
            unpaired_rate = implied_unpaired_rate(classes, spec.tau, spec.tau_pair, spec.pairs)

        def corrupt(position: int) -> np.ndarray:
            seed = derive_seed(spec.seed, f"instance-{position}")
            return apply_instance_noise(scenes[position], spec, seed, unpaired_rate)

        return parallel_map(corrupt, range(len(scenes)), workers)

    def _report(self, scenes: List[Scene], noisy: List[np.ndarray], spec: NoiseSpec) -> Dict[str, Any]:
        per_scene = []
        instances_total = instances_flipped = points_flipped = points_total = 0
        counted_classes = set(spec.partner_map) if spec.kind is NoiseKind.ASYMMETRIC_PAIRS else None

        for scene, labels in zip(scenes, noisy):
            clean = scene.require_labels()
            changed = labels != clean
            entry: Dict[str, Any] = {
                "scene": scene.name,
                "flipped_points": int(changed.sum()),
                "point_rate": round(float(changed.mean()), 10),
            }
            if scene.has_instances:
                ids, classes = instance_catalog(scene)
                if counted_classes is not None:
                    ids = ids[np.isin(classes, list(counted_classes))]
                flipped = sum(bool(changed[scene.instance_ids == i].any()) for i in ids.tolist())
                entry["instances"] = int(ids.size)
                entry["flipped_instances"] = int(flipped)
                instances_total += int(ids.size)
                instances_flipped += int(flipped)
            per_scene.append(entry)
            points_flipped += int(changed.sum())
            points_total += int(changed.size)

        instance_rate = instances_flipped / instances_total if instances_total else None
        point_rate = points_flipped / points_total
        if spec.kind is NoiseKind.BOUNDARY:
            requested, measured = spec.beta, point_rate
        elif spec.kind is NoiseKind.ASYMMETRIC_PAIRS:
            requested, measured = spec.tau_pair, instance_rate or 0.0
        else:
            requested, measured = spec.tau, instance_rate or 0.0

        return {
            "kind": spec.kind.value,
            "requested_rate": requested,
            "measured_rate": round(measured, 10),
            "flipped_points": points_flipped,
            "point_rate": round(point_rate, 10),
            "instance_rate": None if instance_rate is None else round(instance_rate, 10),
            "spec": spec.to_dict(),
            "scenes": per_scene,
        }
