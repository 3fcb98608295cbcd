"""Evaluation report entity."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


@dataclass
class MetricReport:
    """OA / mIoU / OA@edge / OA@in plus correction-coverage statistics."""

    oa: float
    miou: float
    per_class_iou: List[Optional[float]]
    oa_edge: Optional[float] = None
    oa_in: Optional[float] = None
    replaced_fraction: Optional[float] = None
    true_correction_fraction: Optional[float] = None
    point_count: int = 0
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Fixed key names; absent metrics are omitted rather than zeroed."""
        data: Dict[str, Any] = {
            "oa": _rounded(self.oa),
            "miou": _rounded(self.miou),
            "per_class_iou": [_rounded(v) for v in self.per_class_iou],
            "point_count": self.point_count,
        }
        optional = {
            "oa_edge": self.oa_edge,
            "oa_in": self.oa_in,
            "replaced_fraction": self.replaced_fraction,
            "true_correction_fraction": self.true_correction_fraction,
        }
        data.update({k: _rounded(v) for k, v in optional.items() if v is not None})
        data.update(self.extras)
        return data

    def table_rows(self) -> List[tuple[str, str]]:
        """(name, value) pairs for aligned CLI output."""
        rows = [(k, _format(v)) for k, v in self.to_dict().items() if k != "per_class_iou"]
        rows.extend(
            (f"iou[{m}]", _format(v)) for m, v in enumerate(self.per_class_iou)
        )
        return rows


def _rounded(value: Optional[float]) -> Optional[float]:
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return None
    return round(float(value), 10)


def _format(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)
