"""Service interfaces - Algorithm contracts."""

from abc import ABC, abstractmethod

import numpy as np

from src.domain.entities.cluster_set import ClusterSet
from src.domain.entities.scene import Scene


class ISpatialIndex(ABC):
    """Nearest-neighbor index over a scene's positions."""

    @property
    @abstractmethod
    def point_count(self) -> int:
        """Number of indexed points."""

    @abstractmethod
    def knn(self, query_point_id: int, k: int) -> np.ndarray:
        """
        The k nearest point ids of an indexed point.

        Args:
            query_point_id: Id of the query point
            k: Neighbor count, at most the number of points

        Returns:
            Ids ordered by distance; the query itself first, ties by lower id
        """

    @abstractmethod
    def knn_all(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """
        k-NN of every indexed point.

        Returns:
            (ids, distances), both N x k, rows ordered as in :meth:`knn`
        """

    @abstractmethod
    def radius(self, query_point_id: int, radius: float) -> np.ndarray:
        """Ids within ``radius`` of a point (inclusive), ascending."""


class IClusterer(ABC):
    """Produces the clusters used as the unit of label correction."""

    @abstractmethod
    def cluster(self, scene: Scene) -> ClusterSet:
        """
        Partition a scene into clusters.

        Args:
            scene: Scene to partition

        Returns:
            A canonical ClusterSet covering every point
        """


class IPredictor(ABC):
    """Per-point classifier trained on masked labels."""

    class_count: int

    @abstractmethod
    def fit_step(self, features: np.ndarray, targets: np.ndarray, mask: np.ndarray) -> float:
        """
        One gradient step on a batch.

        Args:
            features: B x D feature matrix
            targets: B x M one-hot target matrix
            mask: B booleans; false rows contribute no gradient

        Returns:
            The batch loss before the update (0 for an all-false mask)
        """

    @abstractmethod
    def predict(self, features: np.ndarray) -> np.ndarray:
        """
        Class distributions for a batch.

        Returns:
            B x M matrix whose rows sum to 1
        """

    @abstractmethod
    def state_fingerprint(self) -> bytes:
        """Raw parameter bytes, for determinism checks."""
