"""Boundary band: boundary points and their nearest neighbors."""

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True, eq=False)
class BoundaryBand:
    """
    Point ids of the boundary band derived from one labelling.

    ``boundary_ids`` are the points whose k-NN holds more than one label;
    ``point_ids`` is the union of their k-NN sets. ``epoch`` tags the labelling
    the band was extracted from.
    """

    point_ids: np.ndarray
    boundary_ids: np.ndarray
    point_count: int
    k: int
    epoch: int = 0

    def __post_init__(self) -> None:
        for name in ("point_ids", "boundary_ids"):
            array = np.unique(np.asarray(getattr(self, name), dtype=np.int64))
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def size(self) -> int:
        return int(self.point_ids.shape[0])

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def mask(self) -> np.ndarray:
        """Boolean membership over all points of the scene."""
        member = np.zeros(self.point_count, dtype=bool)
        member[self.point_ids] = True
        return member

    def carried_to(self, epoch: int) -> "BoundaryBand":
        """Same membership, re-tagged for a later epoch (frozen-band ablation)."""
        return replace(self, epoch=epoch)

    def to_dump_lines(self) -> list[str]:
        return [f"{self.epoch} {i}" for i in self.point_ids.tolist()]
