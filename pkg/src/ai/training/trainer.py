"""Two-stage training: warm-up, then noise cleaning around a per-point predictor."""

from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from src.ai.models.features import (
    BlockBatch,
    batch_features,
    point_features,
    split_batch,
    stitch_predictions,
)
from src.ai.training.config import TrainConfig
from src.core.concurrency import parallel_map
from src.core.config.constants import TrainingPhase
from src.core.exceptions import ValidationError
from src.core.observability import get_logger
from src.core.randomness import derive_seed, make_rng
from src.domain.entities.boundary_band import BoundaryBand
from src.domain.entities.cleaning_state import CleaningState
from src.domain.entities.cluster_set import ClusterSet
from src.domain.entities.prediction_history import PredictionHistory
from src.domain.entities.scene import Scene
from src.domain.events import BandExtracted, DomainEvent, EpochCompleted, LabelsCorrected
from src.domain.interfaces.services import IClusterer, IPredictor, ISpatialIndex
from src.domain.services.boundary import band_from_neighbors, boundary_cleaning_epoch
from src.domain.services.label_voting import VotingOutcome, clean_scene
from src.domain.services.partitioning import block_partition, sample_block
from src.infrastructure.spatial import build_index

logger = get_logger(__name__)

EventSink = Callable[[DomainEvent], None]


def scene_batches(
    scene_index: int, scene: Scene, config: TrainConfig, sampled: bool
) -> List[BlockBatch]:
    """
    Blocks of one scene as batches.

    Training batches hold ``block_points`` sampled ids per block (seeded per
    block); prediction batches hold every member so each point gets a label.
    """
    batches = []
    for b, block in enumerate(block_partition(scene, config.block_size, config.block_stride)):
        ids = block.point_ids
        if sampled and config.block_points is not None:
            seed = derive_seed(config.seed, f"sample-{scene_index}-{b}")
            ids = sample_block(block, config.block_points, seed)
        batches.append(BlockBatch(scene_index, ids, block.origin, block.size))
    return batches


def predict_labels(
    predictor: IPredictor,
    scene: Scene,
    static: np.ndarray,
    batches: List[BlockBatch],
) -> np.ndarray:
    """Argmax labels of every point, stitched over blocks."""
    predictions = [
        predictor.predict(batch_features(batch, scene, static)).argmax(axis=1) for batch in batches
    ]
    return stitch_predictions(batches, predictions, scene.point_count)


@dataclass(eq=False)
class SceneTrack:
    """Per-scene training state: labels being cleaned, history, clusters and geometry."""

    scene: Scene
    index: ISpatialIndex
    clusters: ClusterSet
    static_features: np.ndarray
    history: PredictionHistory
    state: CleaningState
    predict_batches: List[BlockBatch]
    clean_labels: Optional[np.ndarray] = None
    band: Optional[BoundaryBand] = None
    _neighbors: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def noisy_labels(self) -> np.ndarray:
        return self.scene.require_labels()

    def boundary_neighbors(self, k: int) -> np.ndarray:
        """k-NN table used for band extraction; geometry is fixed, so computed once."""
        if self._neighbors is None or self._neighbors.shape[1] != k:
            if k > self.scene.point_count:
                raise ValidationError(
                    f"k_boundary={k} exceeds the {self.scene.point_count} points of "
                    f"scene '{self.scene.name}'",
                    field="k_boundary",
                )
            self._neighbors, _ = self.index.knn_all(k)
        return self._neighbors

    def correction_units(self, pointwise: bool) -> ClusterSet:
        return ClusterSet.singletons(self.scene.point_count) if pointwise else self.clusters


def prepare_tracks(
    scenes: List[Scene],
    clusterer: Optional[IClusterer],
    config: TrainConfig,
    clean_labels: Optional[List[np.ndarray]] = None,
    workers: int = 1,
) -> List[SceneTrack]:
    """Index, cluster and featurize every training scene (singleton clusters without a clusterer)."""
    if not scenes:
        raise ValidationError("training set is empty", field="scenes")
    if clean_labels is not None and len(clean_labels) != len(scenes):
        raise ValidationError("clean reference and training set differ in scene count")

    def prepare(position: int) -> SceneTrack:
        scene = scenes[position]
        labels = scene.require_labels()
        clean = None
        if clean_labels is not None:
            clean = np.asarray(clean_labels[position], dtype=np.int64)
            if clean.shape != labels.shape:
                raise ValidationError(
                    f"clean reference of scene '{scene.name}' has {clean.shape[0]} labels "
                    f"for {labels.shape[0]} points"
                )
        index = build_index(scene)
        return SceneTrack(
            scene=scene,
            index=index,
            clusters=(
                clusterer.cluster(scene)
                if clusterer is not None
                else ClusterSet.singletons(scene.point_count)
            ),
            static_features=point_features(scene, index),
            history=PredictionHistory(scene.point_count, scene.class_count, config.history_length),
            state=CleaningState.initial(labels),
            predict_batches=scene_batches(position, scene, config, sampled=False),
            clean_labels=clean,
        )

    return parallel_map(prepare, range(len(scenes)), workers=workers)


class NoiseCleaningTrainer:
    """
    Drives one predictor over a set of scene tracks.

    Epoch numbers are global and 0-based across phases. Every stochastic step
    draws from a generator derived from ``config.seed`` and a tag naming the
    step, so runs are reproducible for any worker count.
    """

    def __init__(
        self,
        tracks: List[SceneTrack],
        predictor: IPredictor,
        config: TrainConfig,
        workers: int = 1,
        on_event: Optional[EventSink] = None,
    ):
        if not tracks:
            raise ValidationError("no scenes to train on", field="tracks")
        self.tracks = tracks
        self.predictor = predictor
        self.config = config
        self.workers = workers
        self.on_event = on_event or (lambda event: None)
        self.epoch = 0
        self.class_count = tracks[0].scene.class_count
        self.train_blocks = [
            split_batch(block, config.batch_points)
            for position, track in enumerate(tracks)
            for block in scene_batches(position, track.scene, config, sampled=True)
        ]
        self._eye = np.eye(self.class_count)

    # ------------------------------------------------------------------
    # phases
    # ------------------------------------------------------------------

    def run_warmup(self, epochs: int) -> None:
        """Unmasked training; each epoch's predictions fill the histories."""
        capacity = self.tracks[0].history.capacity
        if epochs < capacity:
            raise ValidationError(
                f"warm-up of {epochs} epochs cannot fill a history of length {capacity}",
                field="e_warmup",
            )
        for _ in range(epochs):
            loss = self._train_epoch(lambda track, ids: np.ones(ids.shape[0], dtype=bool))
            predicted = self.predict_all()
            self._record(predicted)
            self._finish_epoch(TrainingPhase.WARMUP, loss, predicted)

    def run_ce(self, epochs: int) -> None:
        """Plain cross-entropy on the input labels; no history, no cleaning."""
        for _ in range(epochs):
            loss = self._train_epoch(lambda track, ids: np.ones(ids.shape[0], dtype=bool))
            self._finish_epoch(TrainingPhase.CE, loss, self.predict_all())

    def run_pnal(self, epochs: int) -> None:
        """
        Cleaning epochs: predict, record, select reliable points, vote per
        cluster, overwrite labels, then train only on replaced points.
        """
        for _ in range(epochs):
            predicted = self.predict_all()
            self._record(predicted)
            outcomes = parallel_map(self._clean_track, range(len(self.tracks)), self.workers)
            self._apply(outcomes)
            loss = self._train_epoch(lambda track, ids: track.state.replaced[ids])
            self._finish_epoch(TrainingPhase.CLEAN, loss, predicted)

    def progressive_loop(self, epochs: int) -> None:
        """
        Boundary cleaning epochs. The band is re-derived from the latest labels
        each epoch (or carried forward when frozen); points of the band that
        were never replaced are left out of the loss.
        """
        for _ in range(epochs):
            predicted = self.predict_all()
            self._record(predicted)
            outcomes = parallel_map(self._clean_band, range(len(self.tracks)), self.workers)
            self._apply(outcomes)
            for track in self.tracks:
                lines = track.band.to_dump_lines()
                self.on_event(BandExtracted(epoch=self.epoch, scene=track.scene.name, lines=lines))

            masks = {id(t): t.state.replaced | ~t.band.mask() for t in self.tracks}
            loss = self._train_epoch(lambda track, ids: masks[id(track)][ids])
            band_points = sum(t.band.size for t in self.tracks)
            self._finish_epoch(
                TrainingPhase.BOUNDARY, loss, predicted, band_fraction=band_points / self.point_count
            )

    def reset_histories(self) -> None:
        for track in self.tracks:
            track.history.reset()

    # ------------------------------------------------------------------
    # per-scene steps
    # ------------------------------------------------------------------

    def _clean_track(self, position: int) -> VotingOutcome:
        track = self.tracks[position]
        reliable = track.history.reliable_set(self.config.sigma)
        return clean_scene(
            track.state,
            track.correction_units(self.config.pointwise_correction),
            reliable,
            self.config.gamma,
            make_rng(self.config.seed, f"vote-{self.epoch}-{position}"),
            mask_on_confirm=self.config.mask_on_confirm,
        )

    def _clean_band(self, position: int) -> VotingOutcome:
        track = self.tracks[position]
        if self.config.freeze_band and track.band is not None:
            track.band = track.band.carried_to(self.epoch)
        else:
            neighbors = track.boundary_neighbors(self.config.k_boundary)
            track.band = band_from_neighbors(track.state.labels, neighbors, self.epoch)
        return boundary_cleaning_epoch(
            track.state,
            track.band,
            track.correction_units(self.config.pointwise_correction),
            track.history,
            self.config.sigma,
            self.config.gamma,
            make_rng(self.config.seed, f"vote-{self.epoch}-{position}"),
            self.epoch,
            mask_on_confirm=self.config.mask_on_confirm,
        )

    def _apply(self, outcomes: List[VotingOutcome]) -> None:
        for track, outcome in zip(self.tracks, outcomes):
            track.state = outcome.state
            if outcome.corrections:
                self.on_event(
                    LabelsCorrected(
                        epoch=self.epoch, scene=track.scene.name, lines=outcome.log_lines(self.epoch)
                    )
                )

    # ------------------------------------------------------------------
    # training / prediction
    # ------------------------------------------------------------------

    def _train_epoch(self, mask_for: Callable[[SceneTrack, np.ndarray], np.ndarray]) -> float:
        """
        One pass over the training blocks in a seeded shuffled order. Each block
        is stepped slice by slice in its fixed point order; returns the mean loss
        of the steps that trained.
        """
        rng = make_rng(self.config.seed, f"shuffle-{self.epoch}")
        order = rng.permutation(len(self.train_blocks))
        losses = []
        for b in order:
            for batch in self.train_blocks[b]:
                track = self.tracks[batch.scene_index]
                mask = np.asarray(mask_for(track, batch.point_ids), dtype=bool)
                if not mask.any():
                    continue
                features = batch_features(batch, track.scene, track.static_features)
                targets = self._eye[track.state.labels[batch.point_ids]]
                losses.append(self.predictor.fit_step(features, targets, mask))
        return float(np.mean(losses)) if losses else 0.0

    def predict_all(self) -> List[np.ndarray]:
        return parallel_map(
            lambda t: predict_labels(self.predictor, t.scene, t.static_features, t.predict_batches),
            self.tracks,
            self.workers,
        )

    def _record(self, predicted: List[np.ndarray]) -> None:
        for track, labels in zip(self.tracks, predicted):
            track.history.record_epoch(labels)

    # ------------------------------------------------------------------
    # bookkeeping
    # ------------------------------------------------------------------

    @property
    def point_count(self) -> int:
        return sum(t.scene.point_count for t in self.tracks)

    @property
    def has_clean_reference(self) -> bool:
        return all(t.clean_labels is not None for t in self.tracks)

    def _finish_epoch(
        self,
        phase: TrainingPhase,
        loss: float,
        predicted: List[np.ndarray],
        band_fraction: Optional[float] = None,
    ) -> None:
        replaced = np.concatenate([t.state.replaced for t in self.tracks])
        predicted_all = np.concatenate(predicted)
        if self.has_clean_reference:
            reference = np.concatenate([t.clean_labels for t in self.tracks])
            cleaned = np.concatenate([t.state.labels for t in self.tracks])
            correct = cleaned[replaced] == reference[replaced]
            true_correction = float(correct.mean()) if replaced.any() else None
        else:
            reference = np.concatenate([t.noisy_labels for t in self.tracks])
            true_correction = None

        event = EpochCompleted(
            epoch=self.epoch,
            phase=phase.value,
            loss=round(loss, 10),
            replaced_fraction=round(float(replaced.mean()), 10),
            true_correction_fraction=None if true_correction is None else round(true_correction, 10),
            train_oa=round(float(np.mean(predicted_all == reference)), 10),
            band_fraction=None if band_fraction is None else round(band_fraction, 10),
        )
        logger.info("epoch_completed", **event.to_dict())
        self.on_event(event)
        self.epoch += 1
