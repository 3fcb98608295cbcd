"""Multinomial linear classifier trained with plain SGD."""

import numpy as np
import torch
from torch import nn

from src.ai.training.loss import masked_cross_entropy
from src.core.config.constants import DEFAULT_LEARNING_RATE
from src.core.exceptions import ValidationError
from src.domain.interfaces.services import IPredictor


class SoftmaxRegression(nn.Module):
    """One linear layer; logits per class."""

    def __init__(self, feature_dim: int, class_count: int):
        super().__init__()
        self.linear = nn.Linear(feature_dim, class_count, dtype=torch.float64)

    def forward(self, features: torch.Tensor) -> torch.Tensor:
        return self.linear(features)


class LinearPredictor(IPredictor):
    """
    Softmax regression over per-point features.

    Runs in float64 on the CPU. Parameters start from a seeded small normal
    draw, so the same seed and batches reproduce the same trajectory bit for
    bit.
    """

    def __init__(
        self,
        feature_dim: int,
        class_count: int,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        seed: int = 0,
    ):
        if feature_dim < 1 or class_count < 2:
            raise ValidationError("predictor needs feature_dim >= 1 and class_count >= 2")
        if learning_rate < 0:
            raise ValidationError("learning rate must be non-negative", field="learning_rate")
        self.feature_dim = feature_dim
        self.class_count = class_count
        self.learning_rate = learning_rate

        self.model = SoftmaxRegression(feature_dim, class_count)
        rng = np.random.default_rng(seed)
        with torch.no_grad():
            self.model.linear.weight.copy_(
                torch.from_numpy(rng.normal(0.0, 0.01, (class_count, feature_dim)))
            )
            self.model.linear.bias.zero_()
        self.optimizer = torch.optim.SGD(self.model.parameters(), lr=learning_rate)

    def fit_step(self, features: np.ndarray, targets: np.ndarray, mask: np.ndarray) -> float:
        mask = np.asarray(mask, dtype=bool)
        if features.shape[0] != targets.shape[0] or mask.shape != (features.shape[0],):
            raise ValidationError("features, targets and mask disagree on the batch size")
        if not mask.any():
            return 0.0

        self.model.train()
        self.optimizer.zero_grad()
        loss = masked_cross_entropy(
            self.model(torch.from_numpy(np.asarray(features, dtype=np.float64))),
            torch.from_numpy(np.asarray(targets, dtype=np.float64)),
            torch.from_numpy(mask),
        )
        loss.backward()
        self.optimizer.step()
        return float(loss.item())

    def predict(self, features: np.ndarray) -> np.ndarray:
        self.model.eval()
        with torch.no_grad():
            logits = self.model(torch.from_numpy(np.asarray(features, dtype=np.float64)))
            return torch.softmax(logits, dim=1).numpy()

    def state_fingerprint(self) -> bytes:
        return b"".join(p.detach().numpy().tobytes() for p in self.model.parameters())


def default_predictor(
    feature_dim: int,
    class_count: int,
    learning_rate: float = DEFAULT_LEARNING_RATE,
    seed: int = 0,
) -> LinearPredictor:
    """The predictor used by every pipeline unless another is injected."""
    return LinearPredictor(feature_dim, class_count, learning_rate, seed)
