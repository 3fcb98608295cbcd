"""Tests for block partitioning and block sampling."""

import numpy as np
import pytest

from src.core.exceptions import ValidationError
from src.domain.entities.scene import SceneBlock
from src.domain.services.partitioning import block_partition, sample_block, window_origins
from tests.fixtures import make_scene


@pytest.fixture
def room(rng):
    positions = rng.random((2000, 3)) * np.array([3.3, 2.1, 2.0])
    return make_scene(positions, labels=np.zeros(2000, dtype=int))


class TestWindowOrigins:
    def test_short_span_single_window(self):
        assert window_origins(0.0, 0.4, 1.0, 0.5).tolist() == [0.0]

    @pytest.mark.parametrize("hi", [1.0, 1.7, 2.0, 3.3])
    def test_last_window_reaches_upper_bound(self, hi):
        origins = window_origins(0.0, hi, 1.0, 0.5)
        assert origins[-1] + 1.0 > hi
        # no redundant trailing window
        assert len(origins) == 1 or origins[-2] + 1.0 <= hi


class TestBlockPartition:
    def test_every_point_covered(self, room):
        blocks = block_partition(room)
        covered = np.zeros(room.point_count, dtype=bool)
        for block in blocks:
            covered[block.point_ids] = True
        assert covered.all()

    def test_members_lie_inside_footprint(self, room):
        for block in block_partition(room)[:5]:
            assert all(block.contains(int(i)) for i in block.point_ids[:50])

    def test_blocks_sorted_and_non_empty(self, room):
        blocks = block_partition(room)
        origins = [b.origin for b in blocks]
        assert origins == sorted(origins)
        assert all(b.point_count > 0 for b in blocks)

    def test_z_is_not_split(self, rng):
        positions = rng.random((100, 3)) * np.array([0.5, 0.5, 10.0])
        blocks = block_partition(make_scene(positions))
        assert len(blocks) == 1
        assert blocks[0].point_count == 100

    def test_invalid_stride(self, room):
        with pytest.raises(ValidationError):
            block_partition(room, block_size=1.0, stride=1.5)


class TestSampleBlock:
    def test_large_block_sampled_without_replacement(self, room):
        block = SceneBlock(scene=room, point_ids=np.arange(500), origin=(0.0, 0.0))
        ids = sample_block(block, 200, seed=1)
        assert ids.size == 200
        assert np.unique(ids).size == 200

    def test_small_block_sampled_with_replacement(self, room):
        block = SceneBlock(scene=room, point_ids=np.arange(30), origin=(0.0, 0.0))
        ids = sample_block(block, 100, seed=1)
        assert ids.size == 100
        assert set(ids.tolist()) <= set(range(30))

    def test_same_seed_same_sample(self, room):
        block = SceneBlock(scene=room, point_ids=np.arange(500), origin=(0.0, 0.0))
        assert np.array_equal(sample_block(block, 64, seed=5), sample_block(block, 64, seed=5))

    def test_empty_block(self, room):
        block = SceneBlock(scene=room, point_ids=np.array([], dtype=int), origin=(0.0, 0.0))
        with pytest.raises(ValidationError):
            sample_block(block, 10)
