"""Tests for dataset-producing use cases: synthesis, noise injection, clustering."""

import numpy as np
import pytest

from src.application.features.clustering.commands import ClusterScenesCommand
from src.application.features.clustering.dtos import ClusterScenesInput
from src.application.features.noise.commands import InjectNoiseCommand
from src.application.features.noise.dtos import InjectNoiseInput
from src.application.features.synthesis.commands import GenerateDatasetCommand
from src.application.features.synthesis.dtos import GenerateDatasetInput
from src.core.config.constants import ClusteringMethod, NoiseKind
from src.core.exceptions import NoiseInjectionError, ValidationError
from src.domain.value_objects.noise_spec import NoiseSpec
from src.infrastructure.storage import read_json
from tests.fixtures import small_spec


class TestGenerateDataset:
    def test_writes_manifest_and_scenes(self, repository, tmp_path):
        output = GenerateDatasetCommand(repository).execute(
            GenerateDatasetInput(spec=small_spec(), scene_count=2, seed=4, output_dir=tmp_path / "synth")
        )
        assert output.scene_count == 2
        assert output.point_count == 2 * small_spec().point_count
        manifest = read_json(output.manifest_path)
        assert manifest["metadata"]["seed"] == 4
        assert len(repository.load_dataset(tmp_path / "synth")) == 2

    def test_infeasible_spec_writes_nothing(self, repository, tmp_path):
        with pytest.raises(ValidationError):
            GenerateDatasetCommand(repository).execute(
                GenerateDatasetInput(
                    spec=small_spec(instances_per_class=20), scene_count=1, seed=0, output_dir=tmp_path / "x"
                )
            )
        assert not (tmp_path / "x").exists()


class TestInjectNoise:
    def _run(self, repository, dataset_dir, tmp_path, spec, workers=1):
        return InjectNoiseCommand(repository).execute(
            InjectNoiseInput(input_path=dataset_dir, output_dir=tmp_path / "noisy", spec=spec, workers=workers)
        )

    def test_symmetric_report(self, repository, dataset_dir, tmp_path, synth_scenes):
        output = self._run(repository, dataset_dir, tmp_path, NoiseSpec(kind=NoiseKind.SYMMETRIC, tau=0.5, seed=3))
        report = read_json(output.report_path)
        assert report["kind"] == "symmetric"
        assert report["requested_rate"] == 0.5
        assert len(report["scenes"]) == len(synth_scenes)
        noisy = repository.load_dataset(tmp_path / "noisy")
        flipped = sum(int((n.labels != c.labels).sum()) for n, c in zip(noisy, synth_scenes))
        assert flipped == output.flipped_points == report["flipped_points"]
        assert read_json(output.manifest_path)["metadata"]["noise"]["tau"] == 0.5

    def test_worker_count_does_not_change_noise(self, repository, dataset_dir, tmp_path):
        spec = NoiseSpec(kind=NoiseKind.MIXED_INSTANCE_BOUNDARY, tau=0.3, alpha=0.5, beta=0.5, seed=8)
        serial = self._run(repository, dataset_dir, tmp_path / "a", spec, workers=1)
        threaded = self._run(repository, dataset_dir, tmp_path / "b", spec, workers=3)
        assert serial.scenes == threaded.scenes

    def test_boundary_only_touches_chosen_scenes(self, repository, dataset_dir, tmp_path):
        output = self._run(
            repository, dataset_dir, tmp_path, NoiseSpec(kind=NoiseKind.BOUNDARY, alpha=1 / 3, beta=0.6, seed=1)
        )
        touched = [entry for entry in output.scenes if entry["flipped_points"] > 0]
        assert len(touched) == 1
        assert output.requested_rate == 0.6

    def test_asymmetric_rate_counts_paired_instances(self, repository, dataset_dir, tmp_path):
        spec = NoiseSpec(kind=NoiseKind.ASYMMETRIC_PAIRS, tau_pair=1.0, pairs=((2, 3),))
        output = self._run(repository, dataset_dir, tmp_path, spec)
        assert output.measured_rate == 1.0
        assert all(entry["instances"] == 4 for entry in output.scenes)

    def test_pair_outside_classes(self, repository, dataset_dir, tmp_path):
        with pytest.raises(ValidationError):
            self._run(repository, dataset_dir, tmp_path, NoiseSpec(kind=NoiseKind.ASYMMETRIC_PAIRS, pairs=((0, 9),)))

    def test_infeasible_mixed_setting(self, repository, dataset_dir, tmp_path):
        spec = NoiseSpec(kind=NoiseKind.MIXED_ASYMMETRIC, tau=0.9, tau_pair=0.0, pairs=((0, 1), (2, 3)))
        with pytest.raises(NoiseInjectionError):
            self._run(repository, dataset_dir, tmp_path, spec)


class TestClusterScenes:
    def test_dump_and_summary(self, repository, dataset_dir, tmp_path, synth_scenes):
        output = ClusterScenesCommand(repository).execute(
            ClusterScenesInput(input_path=dataset_dir, output_dir=tmp_path / "clusters", eps=0.05, min_pts=5)
        )
        assert [e["scene"] for e in output.scenes] == [s.name for s in synth_scenes]
        dump = (tmp_path / "clusters" / "clusters" / f"{synth_scenes[0].name}.txt").read_text().splitlines()
        assert len(dump) == synth_scenes[0].point_count
        assert dump[0].split() == ["0", "0"]
        assert read_json(output.summary_path)["method"] == "dbscan"

    def test_instance_method(self, repository, dataset_dir, tmp_path):
        output = ClusterScenesCommand(repository).execute(
            ClusterScenesInput(input_path=dataset_dir, output_dir=tmp_path / "c", method=ClusteringMethod.INSTANCE)
        )
        assert all(e["clusters"] == 8 for e in output.scenes)
        assert all(e["singletons"] == 0 for e in output.scenes)
        assert np.isclose(output.scenes[0]["mean_size"], 80.0)
