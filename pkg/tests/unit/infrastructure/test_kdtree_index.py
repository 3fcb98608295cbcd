"""Tests for the KD-tree spatial index."""

import numpy as np
import pytest

from src.core.exceptions import ValidationError
from src.infrastructure.spatial import KDTreeSpatialIndex, build_index, knn
from tests.fixtures import make_scene


def _brute_force(positions, row, k):
    dist = np.linalg.norm(positions - positions[row], axis=1)
    others = [i for i in np.lexsort((np.arange(len(dist)), dist)) if i != row]
    return [row] + others[: k - 1]


class TestKnn:
    def test_query_point_first(self, rng):
        index = KDTreeSpatialIndex(rng.random((50, 3)))
        for row in range(50):
            assert index.knn(row, 5)[0] == row

    def test_ties_broken_by_lower_id(self):
        positions = np.array([[0.0, 0, 0], [-1.0, 0, 0], [1.0, 0, 0], [0.0, 1, 0]])
        index = KDTreeSpatialIndex(positions)
        assert index.knn(0, 2).tolist() == [0, 1]
        assert index.knn(0, 4).tolist() == [0, 1, 2, 3]

    def test_duplicates_keep_self_first(self):
        positions = np.zeros((5, 3))
        index = KDTreeSpatialIndex(positions)
        assert index.knn(3, 3).tolist() == [3, 0, 1]

    def test_matches_brute_force(self, rng):
        # a coarse grid produces many equal distances
        positions = rng.integers(0, 4, (120, 3)).astype(float)
        index = KDTreeSpatialIndex(positions)
        ids, dists = index.knn_all(12)
        for row in range(0, 120, 7):
            assert ids[row].tolist() == _brute_force(positions, row, 12)
            assert dists[row][0] == 0.0
            assert np.all(np.diff(dists[row]) >= 0)

    def test_k_range_checked(self, rng):
        index = KDTreeSpatialIndex(rng.random((5, 3)))
        with pytest.raises(ValidationError):
            index.knn(0, 6)
        with pytest.raises(ValidationError):
            index.knn(0, 0)

    def test_point_range_checked(self, rng):
        with pytest.raises(ValidationError):
            KDTreeSpatialIndex(rng.random((5, 3))).knn(5, 1)


class TestRadiusAndBuild:
    def test_radius_sorted_and_inclusive(self):
        positions = np.array([[0.0, 0, 0], [0.5, 0, 0], [2.0, 0, 0], [0.0, 0.5, 0]])
        index = KDTreeSpatialIndex(positions)
        assert index.radius(0, 0.5).tolist() == [0, 1, 3]

    def test_build_index_from_scene(self, two_class_line):
        index = build_index(two_class_line)
        assert index.point_count == two_class_line.point_count
        assert knn(index, 0, 2).tolist() == [0, 1]

    def test_empty_positions_rejected(self):
        with pytest.raises(ValidationError):
            KDTreeSpatialIndex(np.zeros((0, 3)))


def test_scene_helper_round_trip(rng):
    scene = make_scene(rng.random((10, 3)))
    assert build_index(scene).knn(4, 1).tolist() == [4]
