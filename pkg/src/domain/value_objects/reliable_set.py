"""Reliable-sample selection result."""

from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ValidationError

UNDEFINED_LABEL = -1


@dataclass(frozen=True, eq=False)
class ReliableSet:
    """Points flagged reliable together with their reliable label m*."""

    mask: np.ndarray
    labels: np.ndarray
    class_count: int

    def __post_init__(self) -> None:
        mask = np.asarray(self.mask, dtype=bool)
        labels = np.asarray(self.labels, dtype=np.int64)
        if mask.shape != labels.shape or mask.ndim != 1:
            raise ValidationError("mask and labels must be 1-D arrays of equal length")
        if np.any(labels[mask] < 0) or np.any(labels[mask] >= self.class_count):
            raise ValidationError("every reliable point needs a valid reliable label")
        labels = np.where(mask, labels, UNDEFINED_LABEL)
        for array in (mask, labels):
            array.setflags(write=False)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def empty(cls, point_count: int, class_count: int) -> "ReliableSet":
        return cls(
            mask=np.zeros(point_count, dtype=bool),
            labels=np.full(point_count, UNDEFINED_LABEL),
            class_count=class_count,
        )

    @property
    def point_ids(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def restricted_to(self, point_ids: np.ndarray) -> "ReliableSet":
        """Keep only reliable points whose id is in ``point_ids``."""
        keep = np.zeros_like(self.mask)
        keep[np.asarray(point_ids, dtype=np.int64)] = True
        return ReliableSet(
            mask=self.mask & keep, labels=self.labels, class_count=self.class_count
        )

    def occurrences(self, members: np.ndarray) -> np.ndarray:
        """occ^m: number of reliable members whose reliable label is m."""
        members = np.asarray(members, dtype=np.int64)
        chosen = self.labels[members][self.mask[members]]
        return np.bincount(chosen, minlength=self.class_count)
