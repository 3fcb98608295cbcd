"""Current training labels and the replaced mask of one scene."""

from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from src.core.exceptions import EntityNotFoundError, ValidationError
from src.domain.entities.cluster_set import ClusterSet


@dataclass(frozen=True)
class LabelCorrection:
    """One overwritten cluster (one line of the correction log)."""

    cluster_id: int
    old_label: int
    new_label: int
    reliable_count: int
    written_points: int

    def to_log_line(self, epoch: int) -> str:
        return f"{epoch} {self.cluster_id} {self.old_label} {self.new_label} {self.reliable_count}"


@dataclass(frozen=True, eq=False)
class CleaningState:
    """
    Training labels plus the per-point replaced mask.

    The mask is monotone: once a point's label has been overwritten (or
    confirmed, see ``mask_on_confirm``) it stays true for the rest of the run.
    States are immutable; corrections return a new state.
    """

    labels: np.ndarray
    replaced: np.ndarray

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64)
        replaced = np.array(self.replaced, dtype=bool)
        if labels.ndim != 1 or labels.shape != replaced.shape:
            raise ValidationError("labels and replaced mask must be 1-D and equally long")
        labels.setflags(write=False)
        replaced.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "replaced", replaced)

    @classmethod
    def initial(cls, labels: np.ndarray) -> "CleaningState":
        labels = np.asarray(labels, dtype=np.int64)
        return cls(labels=labels, replaced=np.zeros(labels.shape[0], dtype=bool))

    @property
    def point_count(self) -> int:
        return int(self.labels.shape[0])

    @property
    def replaced_fraction(self) -> float:
        return float(self.replaced.mean())

    def correct_labels(
        self,
        clusters: ClusterSet,
        winners: Mapping[int, int],
        *,
        restrict_to: Optional[np.ndarray] = None,
        reliable_counts: Optional[Mapping[int, int]] = None,
        mask_on_confirm: bool = True,
    ) -> tuple["CleaningState", list[LabelCorrection]]:
        """
        Overwrite every point of each winning cluster with the winner label.

        ``restrict_to`` is a boolean point mask limiting which members may be
        written (the boundary band). With ``mask_on_confirm`` the replaced mask
        is set for written points even when the winner equals their label.
        """
        if clusters.point_count != self.point_count:
            raise ValidationError("cluster set and state refer to different scenes")
        if not winners:
            return self, []

        winner_ids = np.fromiter(winners.keys(), dtype=np.int64, count=len(winners))
        winner_labels = np.fromiter(winners.values(), dtype=np.int64, count=len(winners))
        unknown = (winner_ids < 0) | (winner_ids >= clusters.cluster_count)
        if unknown.any():
            raise EntityNotFoundError("Cluster", int(winner_ids[unknown][0]))

        by_cluster = np.full(clusters.cluster_count, -1, dtype=np.int64)
        by_cluster[winner_ids] = winner_labels
        target = by_cluster[clusters.cluster_ids]
        written = target >= 0
        if restrict_to is not None:
            written &= np.asarray(restrict_to, dtype=bool)

        labels = self.labels.copy()
        replaced = self.replaced.copy()
        previous = labels[written]
        labels[written] = target[written]
        if mask_on_confirm:
            replaced |= written
        else:
            replaced |= written & (self.labels != labels)

        # majority previous label of the written members, per cluster
        written_clusters = clusters.cluster_ids[written]
        tally = np.zeros((clusters.cluster_count, self._label_span(previous)), dtype=np.int64)
        np.add.at(tally, (written_clusters, previous), 1)
        sizes = tally.sum(axis=1)
        counts = reliable_counts or {}

        corrections = [
            LabelCorrection(
                cluster_id=int(c),
                old_label=int(tally[c].argmax()),
                new_label=int(by_cluster[c]),
                reliable_count=int(counts.get(int(c), 0)),
                written_points=int(sizes[c]),
            )
            for c in np.flatnonzero(sizes)
        ]
        return CleaningState(labels=labels, replaced=replaced), corrections

    @staticmethod
    def _label_span(previous: np.ndarray) -> int:
        return int(previous.max()) + 1 if previous.size else 1
