"""Pytest configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from src.domain.entities.scene import Scene
from src.domain.services.scene_synthesis import generate_dataset, generate_scene
from src.infrastructure.storage import FileSceneRepository
from tests.fixtures import line_scene, small_spec


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def repository() -> FileSceneRepository:
    return FileSceneRepository()


# Sample data fixtures
@pytest.fixture
def two_class_line() -> Scene:
    """Twenty points on a line, ten of each class."""
    return line_scene()


@pytest.fixture
def synth_scene() -> Scene:
    """A small contact-layout room with four classes."""
    return generate_scene(small_spec(), name="room")


@pytest.fixture
def synth_scenes() -> list[Scene]:
    """Three small rooms with distinct sub-seeds."""
    return generate_dataset(small_spec(), scene_count=3, seed=11)


@pytest.fixture
def dataset_dir(tmp_path: Path, repository: FileSceneRepository, synth_scenes: list[Scene]) -> Path:
    """The three small rooms written as a dataset."""
    directory = tmp_path / "clean"
    repository.save_dataset(synth_scenes, directory, metadata={"origin": "fixture"})
    return directory
