"""Tests for the ClusterSet entity."""

import numpy as np
import pytest

from src.core.exceptions import EntityNotFoundError, ValidationError
from src.domain.entities.cluster_set import ClusterSet, cluster_members


class TestFromAssignment:
    def test_ids_numbered_by_first_point(self):
        clusters = ClusterSet.from_assignment(np.array([7, 7, 2, 7, 2, 5]))
        assert clusters.cluster_ids.tolist() == [0, 0, 1, 0, 1, 2]
        assert clusters.cluster_count == 3

    def test_noise_points_become_singletons(self):
        clusters = ClusterSet.from_assignment(np.array([0, -1, 0, -1]))
        assert clusters.cluster_count == 3
        assert clusters.members(1).tolist() == [1]
        assert clusters.members(2).tolist() == [3]

    def test_equal_partitions_get_equal_ids(self):
        a = ClusterSet.from_assignment(np.array([4, 4, 9, 9]))
        b = ClusterSet.from_assignment(np.array([1, 1, 0, 0]))
        assert np.array_equal(a.cluster_ids, b.cluster_ids)

    def test_empty_assignment_rejected(self):
        with pytest.raises(ValidationError):
            ClusterSet.from_assignment(np.array([], dtype=int))


class TestMembers:
    def test_member_lists_partition_points(self, rng):
        clusters = ClusterSet.from_assignment(rng.integers(-1, 6, size=200))
        members = np.concatenate(clusters.member_lists())
        assert sorted(members.tolist()) == list(range(200))
        assert clusters.sizes().sum() == 200

    def test_singleton_cluster(self):
        clusters = ClusterSet.singletons(4)
        assert cluster_members(clusters, 2).tolist() == [2]
        assert clusters.cluster_count == 4

    def test_out_of_range_id(self):
        clusters = ClusterSet.singletons(3)
        with pytest.raises(EntityNotFoundError):
            cluster_members(clusters, 3)
        with pytest.raises(EntityNotFoundError):
            clusters.members(-1)

    def test_dump_lines(self):
        clusters = ClusterSet.from_assignment(np.array([5, 5, 1]))
        assert clusters.to_dump_lines() == ["0 0", "1 0", "2 1"]
