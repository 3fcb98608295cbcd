"""Masked cross-entropy."""

import math

import numpy as np
import torch

from src.core.config.constants import PROBABILITY_FLOOR
from src.core.exceptions import ValidationError

LOG_FLOOR = math.log(PROBABILITY_FLOOR)


def cross_entropy(predictions: np.ndarray, targets: np.ndarray, mask: np.ndarray) -> float:
    """
    Mean of -sum_m q(m) log p(m) over masked-in rows.

    Probabilities are clamped at 1e-12 before the log. An all-false mask gives 0.
    """
    predictions = np.asarray(predictions, dtype=np.float64)
    targets = np.asarray(targets, dtype=np.float64)
    mask = np.asarray(mask, dtype=bool)
    if predictions.shape != targets.shape or predictions.ndim != 2:
        raise ValidationError("predictions and targets must be B x M matrices of one shape")
    if mask.shape != (predictions.shape[0],):
        raise ValidationError("mask must hold one flag per row", field="mask")
    if not mask.any():
        return 0.0
    log_p = np.log(np.clip(predictions[mask], PROBABILITY_FLOOR, None))
    return float(-(targets[mask] * log_p).sum(axis=1).mean())


def masked_cross_entropy(
    logits: torch.Tensor, targets: torch.Tensor, mask: torch.Tensor
) -> torch.Tensor:
    """Torch counterpart of :func:`cross_entropy` over logits, for backprop."""
    log_p = torch.clamp(torch.log_softmax(logits[mask], dim=1), min=LOG_FLOOR)
    return -(targets[mask] * log_p).sum(dim=1).mean()
