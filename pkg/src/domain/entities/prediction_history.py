"""Per-point ring buffer of recent predicted labels."""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import entropy

from src.core.config.constants import DEFAULT_HISTORY_LENGTH
from src.core.exceptions import ValidationError
from src.domain.value_objects.reliable_set import ReliableSet


@dataclass
class PredictionHistory:
    """
    The last ``capacity`` predicted class ids of every point.

    One epoch of predictions is recorded at a time (single writer). Reads are
    safe between epochs.
    """

    point_count: int
    class_count: int
    capacity: int = DEFAULT_HISTORY_LENGTH
    _buffer: np.ndarray = field(init=False, repr=False)
    _fill: np.ndarray = field(init=False, repr=False)
    _cursor: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.point_count < 1:
            raise ValidationError("history needs at least one point", field="point_count")
        if self.capacity < 1:
            raise ValidationError("history capacity must be positive", field="capacity")
        if self.class_count < 2:
            raise ValidationError("class_count must be at least 2", field="class_count")
        self._buffer = np.zeros((self.point_count, self.capacity), dtype=np.int64)
        self._fill = np.zeros(self.point_count, dtype=np.int64)
        self._cursor = np.zeros(self.point_count, dtype=np.int64)

    @property
    def fill(self) -> np.ndarray:
        view = self._fill.view()
        view.setflags(write=False)
        return view

    def record_epoch(self, predictions: np.ndarray) -> "PredictionHistory":
        """Enqueue one prediction per point, evicting the oldest entry when full."""
        predictions = np.asarray(predictions, dtype=np.int64)
        if predictions.shape != (self.point_count,):
            raise ValidationError(
                f"expected {self.point_count} predictions, got shape {predictions.shape}",
                field="predictions",
            )
        if predictions.min() < 0 or predictions.max() >= self.class_count:
            raise ValidationError("predictions must be valid class ids", field="predictions")

        rows = np.arange(self.point_count)
        self._buffer[rows, self._cursor] = predictions
        self._cursor = (self._cursor + 1) % self.capacity
        self._fill = np.minimum(self._fill + 1, self.capacity)
        return self

    def reset(self) -> None:
        self._buffer[:] = 0
        self._fill[:] = 0
        self._cursor[:] = 0

    def entries(self, point: int) -> list[int]:
        """Buffered predictions of one point, oldest first."""
        fill = int(self._fill[point])
        if fill < self.capacity:
            return self._buffer[point, :fill].tolist()
        start = int(self._cursor[point])
        return np.roll(self._buffer[point], -start).tolist()

    def counts(self) -> np.ndarray:
        """N x M matrix of class counts over the buffered entries."""
        counts = np.zeros((self.point_count, self.class_count), dtype=np.int64)
        rows = np.arange(self.point_count)
        for slot in range(self.capacity):
            # slots fill from 0 upward, so slot < fill marks a written entry
            written = slot < self._fill
            np.add.at(counts, (rows[written], self._buffer[written, slot]), 1)
        return counts

    def distributions(self) -> np.ndarray:
        """P(m | x; q) for every point; rows of empty buffers are all zero."""
        self._require_filled()
        return self.counts() / self._fill[:, None]

    def label_distribution(self, point: int) -> np.ndarray:
        """P(m | x; q) for one point: count of m over the buffer fill."""
        fill = int(self._fill[point])
        if fill == 0:
            raise ValidationError(f"point {point} has an empty history", field="point")
        row = self._buffer[point, :fill] if fill < self.capacity else self._buffer[point]
        return np.bincount(row, minlength=self.class_count) / fill

    def confidence(self, point: int, class_count: int | None = None) -> float:
        """Normalized entropy of one point's label distribution, in [0, 1]."""
        m = _class_count(class_count or self.class_count)
        return float(min(1.0, entropy(self.label_distribution(point)) / math.log(m)))

    def confidences(self, class_count: int | None = None) -> np.ndarray:
        """Normalized entropy for every point (0 = fully consistent history)."""
        m = _class_count(class_count or self.class_count)
        return np.clip(entropy(self.distributions(), axis=1) / math.log(m), 0.0, 1.0)

    def reliable_set(self, sigma: float, class_count: int | None = None) -> ReliableSet:
        """
        Flag points whose history is consistent enough: F <= sigma.

        The reliable label m* is the most frequent buffered class, ties going to
        the lower class id.
        """
        if not 0.0 <= sigma <= 1.0:
            raise ValidationError("sigma must lie in [0, 1]", field="sigma")
        m = _class_count(class_count or self.class_count)
        scores = self.confidences(m)
        mask = scores <= sigma
        labels = np.argmax(self.counts(), axis=1)
        return ReliableSet(mask=mask, labels=labels, class_count=self.class_count)

    def _require_filled(self) -> None:
        if np.any(self._fill == 0):
            raise ValidationError("every point needs at least one recorded prediction")


def _class_count(class_count: int) -> int:
    if class_count < 2:
        raise ValidationError("class count must be at least 2", field="class_count")
    return class_count
