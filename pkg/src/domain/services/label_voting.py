"""Cluster-level voting over reliable samples."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from src.core.exceptions import ValidationError
from src.domain.entities.cleaning_state import CleaningState, LabelCorrection
from src.domain.entities.cluster_set import ClusterSet
from src.domain.value_objects.reliable_set import ReliableSet

# bounds numerator growth of float gammas in the integer threshold test
_GAMMA_DENOMINATOR_LIMIT = 10**6


def eligible_clusters(clusters: ClusterSet, reliable: ReliableSet) -> np.ndarray:
    """Ascending ids of the clusters holding at least one reliable member."""
    _check_same_scene(clusters, reliable)
    return np.unique(clusters.cluster_ids[reliable.mask])


def occurrence_matrix(clusters: ClusterSet, reliable: ReliableSet) -> np.ndarray:
    """cluster_count x M matrix: occ[c, m] = reliable members of c with m* = m."""
    _check_same_scene(clusters, reliable)
    occ = np.zeros((clusters.cluster_count, reliable.class_count), dtype=np.int64)
    np.add.at(occ, (clusters.cluster_ids[reliable.mask], reliable.labels[reliable.mask]), 1)
    return occ


def winner_candidates(occ: np.ndarray, gamma: float) -> np.ndarray:
    """
    Boolean matrix of the classes a cluster may vote for.

    Class m qualifies when occ^m >= occ_top / gamma, compared exactly as
    ``occ^m * p >= occ_top * q`` for gamma = p / q. Rows without reliable
    members have no candidate.
    """
    ratio = _gamma_ratio(gamma)
    occ = np.atleast_2d(np.asarray(occ, dtype=np.int64))
    top = occ.max(axis=1, keepdims=True)
    return (occ * ratio.numerator >= top * ratio.denominator) & (top > 0)


def draw_winners(occ: np.ndarray, gamma: float, rng: np.random.Generator) -> np.ndarray:
    """
    One winner per row of ``occ``, uniform over that row's candidates.

    A single draw is consumed per row, even when the candidate set is a
    singleton, so the random stream does not depend on the data.
    """
    candidates = winner_candidates(occ, gamma)
    sizes = candidates.sum(axis=1)
    if np.any(sizes == 0):
        raise ValidationError("every voting cluster needs a reliable member", field="occ")
    picks = rng.integers(0, sizes)
    # index of the picks-th True per row
    rank = np.cumsum(candidates, axis=1) - 1
    hit = candidates & (rank == picks[:, None])
    return np.argmax(hit, axis=1)


def vote_cluster(
    members: np.ndarray, reliable: ReliableSet, gamma: float, rng: np.random.Generator
) -> int:
    """Winner label of one cluster from the occurrence counts of its reliable members."""
    occ = reliable.occurrences(members)
    if occ.sum() == 0:
        raise ValidationError("cluster has no reliable member", field="members")
    return int(draw_winners(occ[None, :], gamma, rng)[0])


@dataclass
class VotingOutcome:
    """Result of one cleaning epoch on one scene."""

    state: CleaningState
    corrections: List[LabelCorrection] = field(default_factory=list)
    reliable_count: int = 0
    eligible_count: int = 0

    def log_lines(self, epoch: int) -> List[str]:
        return [c.to_log_line(epoch) for c in self.corrections]


def clean_scene(
    state: CleaningState,
    clusters: ClusterSet,
    reliable: ReliableSet,
    gamma: float,
    rng: np.random.Generator,
    *,
    restrict_to: Optional[np.ndarray] = None,
    mask_on_confirm: bool = True,
) -> VotingOutcome:
    """
    Vote every eligible cluster and overwrite its labels.

    Clusters are voted in ascending id order. With ``restrict_to`` only
    reliable points inside that mask are counted and only members inside it
    are written.
    """
    if restrict_to is not None:
        reliable = reliable.restricted_to(np.flatnonzero(restrict_to))
    eligible = eligible_clusters(clusters, reliable)
    if eligible.size == 0:
        return VotingOutcome(state=state, reliable_count=reliable.size)

    occ = occurrence_matrix(clusters, reliable)[eligible]
    winners = draw_winners(occ, gamma, rng)
    winner_map: Dict[int, int] = dict(zip(eligible.tolist(), winners.tolist()))
    reliable_counts = dict(zip(eligible.tolist(), occ.sum(axis=1).tolist()))

    new_state, corrections = state.correct_labels(
        clusters,
        winner_map,
        restrict_to=restrict_to,
        reliable_counts=reliable_counts,
        mask_on_confirm=mask_on_confirm,
    )
    return VotingOutcome(
        state=new_state,
        corrections=corrections,
        reliable_count=reliable.size,
        eligible_count=int(eligible.size),
    )


def _gamma_ratio(gamma: float) -> Fraction:
    if gamma < 1:
        raise ValidationError(f"gamma must be at least 1, got {gamma}", field="gamma")
    return Fraction(gamma).limit_denominator(_GAMMA_DENOMINATOR_LIMIT)


def _check_same_scene(clusters: ClusterSet, reliable: ReliableSet) -> None:
    if clusters.point_count != reliable.mask.shape[0]:
        raise ValidationError("clusters and reliable set refer to different scenes")
