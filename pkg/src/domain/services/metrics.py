"""Segmentation metrics and correction-process statistics."""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np
from sklearn.metrics import confusion_matrix

from src.core.exceptions import ValidationError
from src.domain.entities.boundary_band import BoundaryBand
from src.domain.entities.metric_report import MetricReport

BandLike = Union[BoundaryBand, np.ndarray]


def overall_accuracy(pred: np.ndarray, gt: np.ndarray) -> float:
    """Fraction of points whose predicted id equals the ground truth."""
    pred, gt = _aligned(pred, gt)
    return float(np.mean(pred == gt))


def mean_iou(pred: np.ndarray, gt: np.ndarray, class_count: int) -> Tuple[float, List[Optional[float]]]:
    """
    mIoU and per-class IoU = TP / (TP + FP + FN).

    Classes absent from both prediction and ground truth get ``None`` and are
    left out of the mean.
    """
    pred, gt = _aligned(pred, gt)
    cm = confusion_matrix(gt, pred, labels=np.arange(class_count))
    tp = np.diag(cm).astype(np.float64)
    union = cm.sum(axis=0) + cm.sum(axis=1) - tp
    per_class: List[Optional[float]] = [
        float(tp[m] / union[m]) if union[m] > 0 else None for m in range(class_count)
    ]
    present = [v for v in per_class if v is not None]
    return float(np.mean(present)), per_class


def edge_inner_accuracy(
    pred: np.ndarray, gt: np.ndarray, band: BandLike
) -> Tuple[Optional[float], Optional[float]]:
    """
    Accuracy inside the ground-truth boundary band and on its complement.

    Either value is ``None`` when its point set is empty.
    """
    pred, gt = _aligned(pred, gt)
    member = band.mask() if isinstance(band, BoundaryBand) else np.asarray(band, dtype=bool)
    if member.shape != gt.shape:
        raise ValidationError("band and labels refer to different point sets", field="band")
    hits = pred == gt
    oa_edge = float(hits[member].mean()) if member.any() else None
    oa_in = float(hits[~member].mean()) if (~member).any() else None
    return oa_edge, oa_in


@dataclass(frozen=True)
class CorrectionStats:
    """How much of the training set was corrected, and how well."""

    replaced_fraction: float
    true_correction_fraction: Optional[float]
    recovered_fraction: Optional[float]


def correction_stats(
    cleaned: np.ndarray,
    replaced: np.ndarray,
    clean_gt: np.ndarray,
    noisy_start: np.ndarray,
) -> CorrectionStats:
    """
    Coverage and accuracy of the label correction.

    ``true_correction_fraction`` is the accuracy of cleaned labels among
    replaced points (confirmations count). ``recovered_fraction`` is the share
    of initially noisy points whose cleaned label is the clean one.
    """
    cleaned, clean_gt = _aligned(cleaned, clean_gt)
    replaced = np.asarray(replaced, dtype=bool)
    noisy_start = np.asarray(noisy_start)
    if replaced.shape != clean_gt.shape or noisy_start.shape != clean_gt.shape:
        raise ValidationError("correction arrays must have equal length")

    correct = cleaned == clean_gt
    noisy = noisy_start != clean_gt
    return CorrectionStats(
        replaced_fraction=float(replaced.mean()),
        true_correction_fraction=float(correct[replaced].mean()) if replaced.any() else None,
        recovered_fraction=float(correct[noisy].mean()) if noisy.any() else None,
    )


def evaluate(
    pred: np.ndarray,
    gt: np.ndarray,
    class_count: int,
    band: Optional[BandLike] = None,
    correction: Optional[CorrectionStats] = None,
) -> MetricReport:
    """Full MetricReport for one (possibly concatenated) point set."""
    oa = overall_accuracy(pred, gt)
    miou, per_class = mean_iou(pred, gt, class_count)
    oa_edge = oa_in = None
    if band is not None:
        oa_edge, oa_in = edge_inner_accuracy(pred, gt, band)

    extras = {}
    if correction is not None and correction.recovered_fraction is not None:
        extras["recovered_fraction"] = round(correction.recovered_fraction, 10)
    return MetricReport(
        oa=oa,
        miou=miou,
        per_class_iou=per_class,
        oa_edge=oa_edge,
        oa_in=oa_in,
        replaced_fraction=correction.replaced_fraction if correction else None,
        true_correction_fraction=correction.true_correction_fraction if correction else None,
        point_count=int(np.asarray(gt).shape[0]),
        extras=extras,
    )


def _aligned(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValidationError(
            f"label arrays differ in length: {a.shape[0] if a.ndim else 0} vs {b.shape[0] if b.ndim else 0}",
            field="labels",
        )
    if a.size == 0:
        raise ValidationError("cannot evaluate an empty point set", field="labels")
    return a, b
