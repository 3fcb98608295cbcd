"""Training pipeline - dispatches CE / PNAL / PNAL-boundary / mixed runs and evaluates them."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from src.ai.models.features import FEATURE_DIM, point_features
from src.ai.models.linear_predictor import default_predictor
from src.ai.training.config import TrainConfig
from src.ai.training.trainer import (
    EventSink,
    NoiseCleaningTrainer,
    SceneTrack,
    predict_labels,
    prepare_tracks,
    scene_batches,
)
from src.core.concurrency import parallel_map
from src.core.config.constants import PipelineKind
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.core.randomness import derive_seed
from src.domain.entities.metric_report import MetricReport
from src.domain.entities.scene import Scene
from src.domain.events import BandExtracted, DomainEvent, EpochCompleted, LabelsCorrected
from src.domain.interfaces.services import IClusterer, IPredictor
from src.domain.services.boundary import band_from_neighbors, extract_boundary
from src.domain.services.metrics import correction_stats, evaluate
from src.infrastructure.clustering import get_clusterer
from src.infrastructure.spatial import build_index

logger = get_logger(__name__)

BOUNDARY_PIPELINES = (PipelineKind.PNAL_BOUNDARY, PipelineKind.MIXED)


@dataclass
class PipelineResult:
    """Everything a run produces; the caller decides what to persist."""

    config: TrainConfig
    scene_names: List[str]
    cleaned_labels: List[np.ndarray]
    replaced: List[np.ndarray]
    epochs: List[EpochCompleted] = field(default_factory=list)
    corrections: Dict[str, List[str]] = field(default_factory=dict)
    bands: Dict[str, List[str]] = field(default_factory=dict)
    train_report: Optional[MetricReport] = None
    test_report: Optional[MetricReport] = None

    def report_dict(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "pipeline": PipelineKind(self.config.pipeline).value,
            "epochs_run": len(self.epochs),
            "config": self.config.model_dump(mode="json"),
        }
        if self.train_report is not None:
            report["train"] = self.train_report.to_dict()
        if self.test_report is not None:
            report["test"] = self.test_report.to_dict()
        return report


class _EventCollector:
    def __init__(self, result: PipelineResult, forward: Optional[EventSink]):
        self.result = result
        self.forward = forward

    def __call__(self, event: DomainEvent) -> None:
        if isinstance(event, EpochCompleted):
            self.result.epochs.append(event)
        elif isinstance(event, LabelsCorrected):
            self.result.corrections.setdefault(event.scene, []).extend(event.lines)
        elif isinstance(event, BandExtracted):
            self.result.bands.setdefault(event.scene, []).extend(event.lines)
        if self.forward is not None:
            self.forward(event)


def run_pipeline(
    config: TrainConfig,
    scenes: List[Scene],
    clean_labels: Optional[List[np.ndarray]] = None,
    test_scenes: Optional[List[Scene]] = None,
    workers: int = 1,
    predictor: Optional[IPredictor] = None,
    clusterer: Optional[IClusterer] = None,
    on_event: Optional[EventSink] = None,
) -> PipelineResult:
    """
    Train on ``scenes`` (whose labels are the noisy training labels) and evaluate.

    ``mixed`` runs PNAL for ``total_epochs`` and then ``boundary_epochs`` of
    boundary cleaning, sharing prediction histories unless ``reset_history``.
    """
    pipeline = PipelineKind(config.pipeline)
    _check_dataset(pipeline, scenes)
    if test_scenes and any(s.class_count != scenes[0].class_count for s in test_scenes):
        raise ValidationError("test scenes must share the training class count", field="test")

    if clusterer is None and pipeline is not PipelineKind.CE:
        clusterer = get_clusterer(
            config.cluster_method, config.eps_dbscan, config.min_pts, config.block_size
        )
    tracks = prepare_tracks(scenes, clusterer, config, clean_labels, workers)
    class_count = scenes[0].class_count
    predictor = predictor or default_predictor(
        FEATURE_DIM, class_count, config.learning_rate, derive_seed(config.seed, "predictor")
    )

    result = PipelineResult(
        config=config,
        scene_names=[s.name for s in scenes],
        cleaned_labels=[],
        replaced=[],
    )
    trainer = NoiseCleaningTrainer(
        tracks, predictor, config, workers, on_event=_EventCollector(result, on_event)
    )
    logger.info(
        "pipeline_started",
        pipeline=pipeline.value,
        scenes=len(scenes),
        points=trainer.point_count,
        warmup=config.warmup_epochs,
    )

    if pipeline is PipelineKind.CE:
        trainer.run_ce(config.total_epochs)
    else:
        trainer.run_warmup(config.warmup_epochs)
        if pipeline is PipelineKind.PNAL:
            trainer.run_pnal(config.clean_epochs)
        elif pipeline is PipelineKind.PNAL_BOUNDARY:
            trainer.progressive_loop(config.clean_epochs)
        else:
            trainer.run_pnal(config.clean_epochs)
            if config.reset_history:
                trainer.reset_histories()
            trainer.progressive_loop(config.boundary_epochs)

    result.cleaned_labels = [t.state.labels.copy() for t in tracks]
    result.replaced = [t.state.replaced.copy() for t in tracks]
    result.train_report = _train_report(trainer, config)
    if test_scenes:
        result.test_report = evaluate_scenes(predictor, test_scenes, config, workers)

    logger.info(
        "pipeline_finished",
        pipeline=pipeline.value,
        epochs=len(result.epochs),
        train_oa=round(result.train_report.oa, 6),
        test_oa=None if result.test_report is None else round(result.test_report.oa, 6),
    )
    return result


def evaluate_scenes(
    predictor: IPredictor,
    scenes: List[Scene],
    config: TrainConfig,
    workers: int = 1,
) -> MetricReport:
    """Predictor metrics on labelled scenes; OA@edge/OA@in use each scene's own boundary."""

    def run(position: int) -> tuple[np.ndarray, np.ndarray]:
        scene = scenes[position]
        index = build_index(scene)
        batches = scene_batches(position, scene, config, sampled=False)
        predicted = predict_labels(predictor, scene, point_features(scene, index), batches)
        k = min(config.k_boundary, scene.point_count)
        band = extract_boundary(scene.require_labels(), index, k)
        return predicted, band.mask()

    outputs = parallel_map(run, range(len(scenes)), workers)
    return evaluate(
        np.concatenate([p for p, _ in outputs]),
        np.concatenate([s.require_labels() for s in scenes]),
        scenes[0].class_count,
        band=np.concatenate([m for _, m in outputs]),
    )


def _train_report(trainer: NoiseCleaningTrainer, config: TrainConfig) -> MetricReport:
    tracks = trainer.tracks
    predicted = np.concatenate(trainer.predict_all())
    noisy = np.concatenate([t.noisy_labels for t in tracks])
    cleaned = np.concatenate([t.state.labels for t in tracks])
    clean = trainer.has_clean_reference
    reference = np.concatenate([t.clean_labels for t in tracks]) if clean else noisy

    band = np.concatenate(
        [
            _reference_band(t, t.clean_labels if clean else t.noisy_labels, config.k_boundary)
            for t in tracks
        ]
    )
    stats = None
    extras: Dict[str, Any] = {"reference": "clean" if clean else "noisy"}
    if clean:
        replaced = np.concatenate([t.state.replaced for t in tracks])
        stats = correction_stats(cleaned, replaced, reference, noisy)
        extras["label_accuracy"] = round(float(np.mean(cleaned == reference)), 10)
        extras["noisy_label_accuracy"] = round(float(np.mean(noisy == reference)), 10)

    report = evaluate(predicted, reference, trainer.class_count, band=band, correction=stats)
    report.extras.update(extras)
    return report


def _reference_band(track: SceneTrack, labels: np.ndarray, k: int) -> np.ndarray:
    neighbors = track.boundary_neighbors(min(k, track.scene.point_count))
    return band_from_neighbors(labels, neighbors).mask()


def _check_dataset(pipeline: PipelineKind, scenes: List[Scene]) -> None:
    if not scenes:
        raise ValidationError("training set is empty", field="scenes")
    class_counts = {s.class_count for s in scenes}
    if len(class_counts) != 1:
        raise ValidationError("all training scenes must share one class count", field="scenes")
    if pipeline in BOUNDARY_PIPELINES and all(
        np.unique(s.require_labels()).size < 2 for s in scenes
    ):
        raise ValidationError(
            f"pipeline '{pipeline.value}' needs scenes with at least two classes; "
            "every training scene is single-class",
            field="pipeline",
        )
