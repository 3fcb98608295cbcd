"""Boundary band extraction and band-restricted cleaning."""

import numpy as np

from src.core.config.constants import DEFAULT_BOUNDARY_K
from src.core.exceptions import StaleStateError, ValidationError
from src.domain.entities.boundary_band import BoundaryBand
from src.domain.entities.cleaning_state import CleaningState
from src.domain.entities.cluster_set import ClusterSet
from src.domain.entities.prediction_history import PredictionHistory
from src.domain.interfaces.services import ISpatialIndex
from src.domain.services.label_voting import VotingOutcome, clean_scene


def band_from_neighbors(labels: np.ndarray, neighbors: np.ndarray, epoch: int = 0) -> BoundaryBand:
    """
    Band from a precomputed N x k neighbor table (self in column 0).

    A boundary point has at least two distinct labels among its k-NN; the band
    is the union of the k-NN sets of all boundary points.
    """
    labels = np.asarray(labels, dtype=np.int64)
    neighbors = np.asarray(neighbors, dtype=np.int64)
    if neighbors.ndim != 2 or neighbors.shape[0] != labels.shape[0]:
        raise ValidationError("neighbor table must have one row per point", field="neighbors")

    is_boundary = (labels[neighbors] != labels[:, None]).any(axis=1)
    boundary_ids = np.flatnonzero(is_boundary)
    return BoundaryBand(
        point_ids=neighbors[boundary_ids].ravel(),
        boundary_ids=boundary_ids,
        point_count=int(labels.shape[0]),
        k=int(neighbors.shape[1]),
        epoch=epoch,
    )


def extract_boundary(
    labels: np.ndarray,
    index: ISpatialIndex,
    k: int = DEFAULT_BOUNDARY_K,
    epoch: int = 0,
) -> BoundaryBand:
    """Boundary points of ``labels`` plus their k nearest neighbors."""
    labels = np.asarray(labels)
    if labels.shape[0] != index.point_count:
        raise ValidationError("labels and index refer to different scenes", field="labels")
    if k > index.point_count:
        raise ValidationError(f"k={k} exceeds the {index.point_count} points of the scene", field="k")
    neighbors, _ = index.knn_all(k)
    return band_from_neighbors(labels, neighbors, epoch)


def boundary_cleaning_epoch(
    state: CleaningState,
    band: BoundaryBand,
    clusters: ClusterSet,
    history: PredictionHistory,
    sigma: float,
    gamma: float,
    rng: np.random.Generator,
    epoch: int,
    *,
    mask_on_confirm: bool = True,
) -> VotingOutcome:
    """
    One cleaning step confined to the band.

    Reliability is computed for every point, but only reliable band members
    vote and only band members of a winning cluster are written. Points
    outside the band keep their labels bit for bit.
    """
    if band.epoch != epoch:
        raise StaleStateError(
            "boundary band is stale", expected=epoch, actual=band.epoch
        )
    if band.point_count != state.point_count:
        raise ValidationError("band and state refer to different scenes", field="band")
    if band.is_empty:
        return VotingOutcome(state=state)

    reliable = history.reliable_set(sigma)
    return clean_scene(
        state,
        clusters,
        reliable,
        gamma,
        rng,
        restrict_to=band.mask(),
        mask_on_confirm=mask_on_confirm,
    )


def inner_points_untouched(before: np.ndarray, after: np.ndarray, band: BoundaryBand) -> bool:
    """True when no label outside ``band`` changed between two labellings."""
    outside = ~band.mask()
    return bool(np.array_equal(np.asarray(before)[outside], np.asarray(after)[outside]))
