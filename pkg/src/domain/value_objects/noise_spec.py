"""Noise specification value object."""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from src.core.config.constants import NoiseKind
from src.core.exceptions import ValidationError


@dataclass(frozen=True)
class NoiseSpec:
    """Parameters of one synthetic label-noise setting."""

    kind: NoiseKind
    tau: float = 0.0
    tau_pair: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    pairs: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", NoiseKind(self.kind))
        for name in ("tau", "tau_pair", "alpha", "beta"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {value}", field=name)
        if self.seed < 0:
            raise ValidationError("seed must be non-negative", field="seed")

        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        seen: set[int] = set()
        for a, b in pairs:
            if a == b or a < 0 or b < 0:
                raise ValidationError(f"invalid class pair ({a}, {b})", field="pairs")
            if a in seen or b in seen:
                raise ValidationError(
                    f"class pairs overlap: class {a if a in seen else b} appears twice",
                    field="pairs",
                )
            seen.update((a, b))
        object.__setattr__(self, "pairs", pairs)

    def validate_classes(self, class_count: int) -> None:
        """Pairs must reference class ids below ``class_count``."""
        for a, b in self.pairs:
            if a >= class_count or b >= class_count:
                raise ValidationError(
                    f"pair ({a}, {b}) references a class outside [0, {class_count - 1}]",
                    field="pairs",
                )

    @property
    def partner_map(self) -> Dict[int, int]:
        partners: Dict[int, int] = {}
        for a, b in self.pairs:
            partners[a] = b
            partners[b] = a
        return partners

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "tau": self.tau,
            "tau_pair": self.tau_pair,
            "alpha": self.alpha,
            "beta": self.beta,
            "pairs": [list(p) for p in self.pairs],
            "seed": self.seed,
        }
