"""Tests for cluster-level voting."""

import itertools

import numpy as np
import pytest

from src.core.exceptions import ValidationError
from src.domain.entities.cleaning_state import CleaningState
from src.domain.entities.cluster_set import ClusterSet
from src.domain.services.label_voting import (
    clean_scene,
    draw_winners,
    eligible_clusters,
    occurrence_matrix,
    vote_cluster,
    winner_candidates,
)
from src.domain.value_objects.reliable_set import ReliableSet


def _reliable(labels, mask=None, class_count=3) -> ReliableSet:
    labels = np.asarray(labels)
    mask = np.ones(labels.shape, dtype=bool) if mask is None else np.asarray(mask)
    return ReliableSet(mask=mask, labels=labels, class_count=class_count)


def _brute_candidates(occ: list[int], gamma: float) -> set[int]:
    top = max(occ)
    return {m for m, count in enumerate(occ) if top > 0 and count * gamma >= top}


class TestWinnerCandidates:
    def test_gamma_four_admits_quarter_counts(self):
        assert winner_candidates(np.array([[4, 1, 0]]), 4.0).tolist() == [[True, True, False]]

    def test_gamma_one_keeps_ties_only(self):
        assert winner_candidates(np.array([[3, 3, 2]]), 1.0).tolist() == [[True, True, False]]

    def test_boundary_ratio_is_exact(self):
        # 10 / 3 is not a float, the comparison still has to be exact
        gamma = 10 / 3
        assert winner_candidates(np.array([[10, 3, 2]]), gamma).tolist() == [[True, True, False]]

    def test_row_without_reliable_members(self):
        assert not winner_candidates(np.array([[0, 0, 0]]), 2.0).any()

    def test_gamma_below_one_rejected(self):
        with pytest.raises(ValidationError):
            winner_candidates(np.array([[1, 0]]), 0.5)

    def test_matches_brute_force(self, rng):
        for _ in range(1000):
            occ = rng.integers(0, 12, size=(1, int(rng.integers(2, 6))))
            gamma = float(rng.choice([1.0, 1.5, 2.0, 3.0, 4.0, 8.0]))
            got = set(np.flatnonzero(winner_candidates(occ, gamma)[0]).tolist())
            assert got == _brute_candidates(occ[0].tolist(), gamma)


class TestDrawWinners:
    def test_single_candidate_always_wins(self, rng):
        winners = draw_winners(np.array([[0, 5, 0], [9, 0, 1]]), 1.0, rng)
        assert winners.tolist() == [1, 0]

    def test_draws_are_uniform_over_candidates(self):
        rng = np.random.default_rng(0)
        occ = np.tile(np.array([[4, 4, 4, 0]]), (6000, 1))
        counts = np.bincount(draw_winners(occ, 1.0, rng), minlength=4)
        assert counts[3] == 0
        assert all(1800 < c < 2200 for c in counts[:3])

    def test_same_seed_same_winners(self):
        occ = np.array([[2, 2, 1], [1, 1, 1], [0, 3, 3]])
        first = draw_winners(occ, 2.0, np.random.default_rng(5))
        second = draw_winners(occ, 2.0, np.random.default_rng(5))
        assert np.array_equal(first, second)

    def test_row_without_candidate_rejected(self, rng):
        with pytest.raises(ValidationError):
            draw_winners(np.array([[0, 0]]), 1.0, rng)


class TestVoteCluster:
    def test_majority_wins_with_gamma_one(self, rng):
        reliable = _reliable([0, 0, 1, 2])
        assert vote_cluster(np.array([0, 1, 2]), reliable, 1.0, rng) == 0

    def test_unreliable_members_do_not_vote(self, rng):
        reliable = _reliable([0, 0, 1], mask=[False, False, True])
        assert vote_cluster(np.array([0, 1, 2]), reliable, 1.0, rng) == 1

    def test_cluster_without_reliable_members(self, rng):
        reliable = _reliable([0, 1], mask=[False, False])
        with pytest.raises(ValidationError):
            vote_cluster(np.array([0, 1]), reliable, 1.0, rng)

    def test_winner_is_always_a_candidate(self):
        for seed, occ in zip(range(200), itertools.cycle([[5, 2, 1], [3, 3, 0], [1, 1, 1]])):
            labels = np.repeat(np.arange(3), occ)
            reliable = _reliable(labels)
            winner = vote_cluster(np.arange(labels.size), reliable, 2.5, np.random.default_rng(seed))
            assert winner in _brute_candidates(occ, 2.5)


class TestCleanScene:
    def test_eligible_clusters_need_a_reliable_member(self):
        clusters = ClusterSet.from_assignment(np.array([0, 0, 1, 1, 2]))
        reliable = _reliable([0, 0, 1, 1, 2], mask=[True, False, False, False, True])
        assert eligible_clusters(clusters, reliable).tolist() == [0, 2]
        assert occurrence_matrix(clusters, reliable).tolist() == [[1, 0, 0], [0, 0, 0], [0, 0, 1]]

    def test_noisy_cluster_corrected_and_masked(self, rng):
        clusters = ClusterSet.from_assignment(np.array([0, 0, 0, 0, 1, 1]))
        state = CleaningState.initial(np.array([2, 2, 2, 2, 1, 1]))
        reliable = _reliable([0, 0, 0, 2, 1, 1], mask=[True, True, True, True, False, False])
        outcome = clean_scene(state, clusters, reliable, 1.0, rng)
        assert outcome.state.labels.tolist() == [0, 0, 0, 0, 1, 1]
        assert outcome.state.replaced.tolist() == [True] * 4 + [False] * 2
        assert outcome.eligible_count == 1
        assert outcome.reliable_count == 4
        assert outcome.log_lines(3) == ["3 0 2 0 4"]

    def test_no_reliable_points_leaves_state(self, rng):
        clusters = ClusterSet.singletons(3)
        state = CleaningState.initial(np.array([0, 1, 2]))
        outcome = clean_scene(state, clusters, ReliableSet.empty(3, 3), 1.0, rng)
        assert outcome.state is state
        assert outcome.corrections == []

    def test_restriction_hides_outside_votes(self, rng):
        clusters = ClusterSet.from_assignment(np.zeros(4, dtype=int))
        state = CleaningState.initial(np.array([1, 1, 1, 1]))
        reliable = _reliable([0, 0, 0, 2])
        band = np.array([False, False, True, True])
        outcome = clean_scene(state, clusters, reliable, 1.0, rng, restrict_to=band)
        # only points 2 and 3 vote; both candidates tie, only they may change
        assert outcome.state.labels[:2].tolist() == [1, 1]
        assert set(outcome.state.labels[2:].tolist()) <= {0, 2}
        assert outcome.reliable_count == 2
