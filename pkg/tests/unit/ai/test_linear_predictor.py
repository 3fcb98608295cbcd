"""Tests for the softmax-regression predictor and its loss."""

import math

import numpy as np
import pytest
import torch

from src.ai.models.linear_predictor import LinearPredictor, default_predictor
from src.ai.training.loss import cross_entropy, masked_cross_entropy
from src.core.exceptions import ValidationError


@pytest.fixture
def separable(rng):
    features = rng.normal(size=(120, 4))
    labels = (features[:, 0] > 0).astype(int)
    return features, np.eye(2)[labels]


class TestCrossEntropy:
    def test_matches_definition(self):
        predictions = np.array([[0.7, 0.3], [0.2, 0.8], [0.5, 0.5]])
        targets = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 0.0]])
        mask = np.array([True, True, False])
        expected = -(np.log(0.7) + np.log(0.8)) / 2
        assert cross_entropy(predictions, targets, mask) == pytest.approx(expected)

    def test_zero_probability_clamped(self):
        loss = cross_entropy(np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]]), np.array([True]))
        assert loss == pytest.approx(-np.log(1e-12))

    def test_empty_mask(self):
        assert cross_entropy(np.ones((2, 2)) / 2, np.eye(2), np.zeros(2, dtype=bool)) == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError):
            cross_entropy(np.ones((2, 2)), np.ones((2, 3)), np.ones(2, dtype=bool))

    def test_torch_version_agrees(self, rng):
        logits = rng.normal(size=(6, 3))
        targets = np.eye(3)[rng.integers(0, 3, 6)]
        mask = np.array([True, False, True, True, False, True])
        probabilities = np.exp(logits) / np.exp(logits).sum(axis=1, keepdims=True)
        torch_loss = masked_cross_entropy(
            torch.from_numpy(logits), torch.from_numpy(targets), torch.from_numpy(mask)
        )
        assert float(torch_loss) == pytest.approx(cross_entropy(probabilities, targets, mask))

    def test_matches_brute_force_on_random_batches(self, rng):
        for _ in range(1000):
            rows, classes = int(rng.integers(1, 9)), int(rng.integers(2, 7))
            logits = rng.normal(0.0, float(rng.choice([1.0, 30.0])), size=(rows, classes))
            targets = rng.dirichlet(np.ones(classes), size=rows)
            mask = rng.random(rows) < 0.7
            probabilities = np.exp(logits - logits.max(axis=1, keepdims=True))
            probabilities /= probabilities.sum(axis=1, keepdims=True)

            terms = []
            for i in np.flatnonzero(mask):
                shifted = logits[i] - logits[i].max()
                log_p = shifted - math.log(sum(math.exp(v) for v in shifted))
                terms.append(-sum(q * max(lp, math.log(1e-12)) for q, lp in zip(targets[i], log_p)))
            expected = float(np.mean(terms)) if terms else 0.0

            assert cross_entropy(probabilities, targets, mask) == pytest.approx(expected, rel=1e-9, abs=1e-12)
            if mask.any():
                torch_loss = masked_cross_entropy(
                    torch.from_numpy(logits), torch.from_numpy(targets), torch.from_numpy(mask)
                )
                assert float(torch_loss) == pytest.approx(expected, rel=1e-9, abs=1e-12)


class TestLinearPredictor:
    def test_same_seed_same_trajectory(self, separable):
        features, targets = separable
        mask = np.ones(120, dtype=bool)
        first, second = LinearPredictor(4, 2, seed=3), LinearPredictor(4, 2, seed=3)
        for _ in range(3):
            first.fit_step(features, targets, mask)
            second.fit_step(features, targets, mask)
        assert first.state_fingerprint() == second.state_fingerprint()

    def test_empty_mask_leaves_parameters(self, separable):
        features, targets = separable
        predictor = default_predictor(4, 2, seed=1)
        before = predictor.state_fingerprint()
        assert predictor.fit_step(features, targets, np.zeros(120, dtype=bool)) == 0.0
        assert predictor.state_fingerprint() == before

    def test_loss_decreases(self, separable):
        features, targets = separable
        predictor = LinearPredictor(4, 2, learning_rate=0.5, seed=0)
        mask = np.ones(120, dtype=bool)
        losses = [predictor.fit_step(features, targets, mask) for _ in range(40)]
        assert losses[-1] < losses[0]
        accuracy = np.mean(predictor.predict(features).argmax(axis=1) == targets.argmax(axis=1))
        assert accuracy > 0.9

    def test_predictions_are_distributions(self, separable):
        probabilities = LinearPredictor(4, 2).predict(separable[0])
        assert probabilities.shape == (120, 2)
        assert np.allclose(probabilities.sum(axis=1), 1.0)

    def test_reported_loss_matches_numpy(self, separable):
        features, targets = separable
        predictor = LinearPredictor(4, 2, seed=2)
        mask = np.arange(120) % 3 == 0
        expected = cross_entropy(predictor.predict(features), targets, mask)
        assert predictor.fit_step(features, targets, mask) == pytest.approx(expected)

    def test_batch_size_mismatch(self, separable):
        features, targets = separable
        with pytest.raises(ValidationError):
            LinearPredictor(4, 2).fit_step(features, targets[:10], np.ones(120, dtype=bool))

    def test_invalid_shape(self):
        with pytest.raises(ValidationError):
            LinearPredictor(4, 1)

    def test_separable_classes_learned_in_five_epochs(self, rng):
        labels = np.repeat(np.arange(6), 200)
        features = np.zeros((labels.size, 10))
        features[np.arange(labels.size), labels] = 2.0
        features += rng.normal(0.0, 0.05, features.shape)
        targets = np.eye(6)[labels]
        predictor = default_predictor(10, 6, seed=4)
        for _ in range(5):
            for batch in np.array_split(rng.permutation(labels.size), 20):
                predictor.fit_step(features[batch], targets[batch], np.ones(batch.size, dtype=bool))
        accuracy = np.mean(predictor.predict(features).argmax(axis=1) == labels)
        assert accuracy >= 0.99

    def test_zero_learning_rate_keeps_predictions(self, separable):
        features, targets = separable
        predictor = LinearPredictor(4, 2, learning_rate=0.0, seed=6)
        before = predictor.predict(features)
        for _ in range(10):
            predictor.fit_step(features, targets, np.ones(120, dtype=bool))
        assert np.array_equal(predictor.predict(features), before)
