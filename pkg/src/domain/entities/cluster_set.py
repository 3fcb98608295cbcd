"""ClusterSet entity: the partition of a scene into correction units."""

from dataclasses import dataclass
from typing import Iterator, List

import numpy as np

from src.core.exceptions import EntityNotFoundError, ValidationError


@dataclass(frozen=True, eq=False)
class ClusterSet:
    """
    Per-point cluster ids in ``{0..k-1}`` with cached member lists.

    Cluster ids are canonical: clusters are numbered in order of their lowest
    point id, so two equal partitions always carry identical ids.
    """

    cluster_ids: np.ndarray
    cluster_count: int

    def __post_init__(self) -> None:
        ids = np.asarray(self.cluster_ids, dtype=np.int64)
        if ids.ndim != 1 or ids.size == 0:
            raise ValidationError("cluster_ids must be a non-empty 1-D array")
        if ids.min() < 0 or ids.max() >= self.cluster_count:
            raise ValidationError("cluster ids must lie in [0, cluster_count)")
        ids = ids.copy()
        ids.setflags(write=False)
        object.__setattr__(self, "cluster_ids", ids)

        order = np.argsort(ids, kind="stable")
        order.setflags(write=False)
        bounds = np.searchsorted(ids[order], np.arange(self.cluster_count + 1))
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_bounds", bounds)

    @classmethod
    def from_assignment(cls, assignment: np.ndarray) -> "ClusterSet":
        """
        Build a canonical ClusterSet from any per-point grouping.

        Negative entries are treated as unassigned and each becomes its own
        singleton cluster.
        """
        assignment = np.asarray(assignment, dtype=np.int64)
        if assignment.ndim != 1 or assignment.size == 0:
            raise ValidationError("assignment must be a non-empty 1-D array")

        keyed = assignment.copy()
        noise = keyed < 0
        if noise.any():
            # singleton keys placed above every real group id
            offset = keyed.max(initial=-1) + 1
            keyed[noise] = offset + np.flatnonzero(noise)

        _, first_index, inverse = np.unique(keyed, return_index=True, return_inverse=True)
        rank = np.empty_like(first_index)
        rank[np.argsort(first_index, kind="stable")] = np.arange(first_index.size)
        return cls(cluster_ids=rank[inverse.reshape(-1)], cluster_count=int(first_index.size))

    @classmethod
    def singletons(cls, point_count: int) -> "ClusterSet":
        """Every point in its own cluster (point-wise correction)."""
        return cls(cluster_ids=np.arange(point_count), cluster_count=point_count)

    @property
    def point_count(self) -> int:
        return int(self.cluster_ids.shape[0])

    def members(self, cluster_id: int) -> np.ndarray:
        """Point ids of one cluster, ascending."""
        if not 0 <= cluster_id < self.cluster_count:
            raise EntityNotFoundError("Cluster", cluster_id)
        start, stop = self._bounds[cluster_id], self._bounds[cluster_id + 1]
        return self._order[start:stop]

    def member_lists(self) -> List[np.ndarray]:
        return [self.members(c) for c in range(self.cluster_count)]

    def sizes(self) -> np.ndarray:
        return np.diff(self._bounds)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.member_lists())

    def to_dump_lines(self) -> List[str]:
        """Debug dump: one ``point_id cluster_id`` line per point."""
        return [f"{i} {c}" for i, c in enumerate(self.cluster_ids.tolist())]


def cluster_members(clusters: ClusterSet, cluster_id: int) -> np.ndarray:
    """Member list of ``cluster_id``; raises for out-of-range ids."""
    return clusters.members(cluster_id)
