"""Instance-level and boundary-level synthetic label noise."""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.config.constants import (
    BOUNDARY_NOISE_K,
    DEFAULT_MAX_FRUITLESS_ITERATIONS,
    NoiseKind,
)
from src.core.exceptions import NoiseInjectionError, ValidationError
from src.core.randomness import derive_seed
from src.domain.entities.scene import Scene
from src.domain.interfaces.services import ISpatialIndex
from src.domain.value_objects.noise_spec import NoiseSpec

Pairs = Sequence[Tuple[int, int]]


@dataclass(frozen=True)
class NoiseReport:
    """Requested vs measured corruption of one scene or dataset."""

    requested_rate: float
    measured_rate: float
    flipped_points: int
    unit: str
    total_units: int = 0
    flipped_units: int = 0

    def to_dict(self) -> dict:
        return {
            "requested_rate": self.requested_rate,
            "measured_rate": round(self.measured_rate, 10),
            "flipped_points": self.flipped_points,
            "unit": self.unit,
            "total_units": self.total_units,
            "flipped_units": self.flipped_units,
        }


# ---------------------------------------------------------------------------
# instance-level noise
# ---------------------------------------------------------------------------


def instance_catalog(scene: Scene) -> Tuple[np.ndarray, np.ndarray]:
    """Sorted instance ids and each instance's (majority) clean class."""
    labels = scene.require_labels()
    instances = scene.require_instances()
    ids, inverse = np.unique(instances, return_inverse=True)
    classes = np.empty(ids.size, dtype=np.int64)
    for slot in range(ids.size):
        classes[slot] = np.bincount(labels[inverse == slot]).argmax()
    return ids, classes


def implied_unpaired_rate(
    instance_classes: np.ndarray, tau: float, tau_pair: float, pairs: Pairs
) -> float:
    """
    Flip rate for unpaired classes making the expected overall rate equal tau.

    Solves ``(n_pair * tau_pair + n_free * r) / n = tau`` for ``r``.
    """
    paired = {c for pair in pairs for c in pair}
    in_pair = np.isin(instance_classes, list(paired))
    n = instance_classes.size
    n_pair = int(in_pair.sum())
    n_free = n - n_pair
    if n_free == 0:
        if not math.isclose(tau, tau_pair, abs_tol=1e-12):
            raise NoiseInjectionError(
                "every instance belongs to a pair, so the overall rate equals tau_pair",
                details={"tau": tau, "tau_pair": tau_pair},
            )
        return 0.0
    rate = (tau * n - tau_pair * n_pair) / n_free
    if rate < -1e-12 or rate > 1.0 + 1e-12:
        raise NoiseInjectionError(
            f"infeasible noise setting: implied unpaired flip rate {rate:.4f} is outside [0, 1]",
            details={"implied_unpaired_rate": rate, "tau": tau, "tau_pair": tau_pair},
        )
    return min(1.0, max(0.0, rate))


def _flip_instances(
    scene: Scene,
    free_rate: float,
    tau_pair: float,
    pairs: Pairs,
    seed: int,
) -> np.ndarray:
    """
    Shared instance flipper.

    Instances are visited in ascending id order. Paired classes flip to their
    partner with ``tau_pair``; other classes flip with ``free_rate`` to a
    uniformly chosen different class. Every point of a flipped instance
    receives the same new label.
    """
    labels = scene.require_labels()
    instances = scene.require_instances()
    partners: Dict[int, int] = {}
    for a, b in pairs:
        partners[a] = b
        partners[b] = a

    rng = np.random.default_rng(seed)
    ids, classes = instance_catalog(scene)
    noisy = labels.copy()
    for instance_id, clean in zip(ids.tolist(), classes.tolist()):
        draw = rng.random()
        if clean in partners:
            if draw < tau_pair:
                noisy[instances == instance_id] = partners[clean]
        elif draw < free_rate:
            others = [m for m in range(scene.class_count) if m != clean]
            noisy[instances == instance_id] = others[int(rng.integers(len(others)))]
    return noisy


def inject_symmetric(scene: Scene, tau: float, seed: int) -> np.ndarray:
    """Each instance flips with probability tau to a uniformly chosen other class."""
    _check_rate(tau, "tau")
    return _flip_instances(scene, free_rate=tau, tau_pair=0.0, pairs=(), seed=seed)


def inject_asymmetric_pairs(scene: Scene, tau_pair: float, pairs: Pairs, seed: int) -> np.ndarray:
    """Instances of paired classes flip to the partner class with probability tau_pair."""
    _check_rate(tau_pair, "tau_pair")
    pairs = _checked_pairs(pairs, scene.class_count)
    return _flip_instances(scene, free_rate=0.0, tau_pair=tau_pair, pairs=pairs, seed=seed)


def inject_mixed_asymmetric(
    scene: Scene,
    tau: float,
    tau_pair: float,
    pairs: Pairs,
    seed: int,
    unpaired_rate: Optional[float] = None,
) -> np.ndarray:
    """
    Within-pair flips at tau_pair plus symmetric flips of unpaired classes.

    The unpaired rate is solved from this scene's instance catalog unless a
    dataset-level ``unpaired_rate`` is supplied.
    """
    _check_rate(tau, "tau")
    _check_rate(tau_pair, "tau_pair")
    pairs = _checked_pairs(pairs, scene.class_count)
    if unpaired_rate is None:
        _, classes = instance_catalog(scene)
        unpaired_rate = implied_unpaired_rate(classes, tau, tau_pair, pairs)
    return _flip_instances(scene, free_rate=unpaired_rate, tau_pair=tau_pair, pairs=pairs, seed=seed)


def instance_flip_report(scene: Scene, noisy: np.ndarray, requested: float) -> NoiseReport:
    """Fraction of instances whose label changed."""
    labels = scene.require_labels()
    instances = scene.require_instances()
    ids = np.unique(instances)
    changed = noisy != labels
    flipped = sum(bool(changed[instances == i].any()) for i in ids.tolist())
    return NoiseReport(
        requested_rate=requested,
        measured_rate=flipped / ids.size,
        flipped_points=int(changed.sum()),
        unit="instance",
        total_units=int(ids.size),
        flipped_units=int(flipped),
    )


# ---------------------------------------------------------------------------
# boundary-level noise
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryNoiseModel:
    """
    Precomputed neighborhoods for morphological boundary noise.

    ``corruptible`` marks points inside the k-NN of a clean boundary point of a
    different class with a non-zero flip probability; its size fixes the
    threshold.

    This is narrower than the plain union of every boundary point's k-NN. A
    neighbor sharing the boundary point's label is never changed by a flip,
    and one at twice the mean neighbor distance or beyond has probability
    zero, so neither can ever become noisy. Counting them would ask for more
    flips than the loop can produce: at beta near 1 the target exceeds the
    reachable set and injection stalls until the fruitless-iteration guard
    fires. With the narrower set ``beta`` is the fraction of reachable
    points that end up noisy.
    """

    neighbors: np.ndarray
    distances: np.ndarray
    is_boundary: np.ndarray
    corruptible: np.ndarray

    @classmethod
    def build(cls, labels: np.ndarray, index: ISpatialIndex, k: int = BOUNDARY_NOISE_K) -> "BoundaryNoiseModel":
        k = min(k, index.point_count)
        neighbors, distances = index.knn_all(k)
        is_boundary = (labels[neighbors] != labels[:, None]).any(axis=1)

        corruptible = np.zeros(labels.shape[0], dtype=bool)
        for i in np.flatnonzero(is_boundary):
            nn, dist = neighbors[i], distances[i]
            reach = dist < 2.0 * dist.mean()
            corruptible[nn[reach & (labels[nn] != labels[i])]] = True
        return cls(neighbors, distances, is_boundary, corruptible)

    def threshold(self, beta: float) -> int:
        """ceil(beta * |corruptible|), at least one flip for any positive beta."""
        if beta <= 0:
            return 0
        return max(1, math.ceil(beta * int(self.corruptible.sum())))


def flip_probabilities(distances: np.ndarray, beta: float) -> np.ndarray:
    """beta * clamp(1 - d / (2 * davg), 0, 1): closer neighbors flip more often."""
    davg = distances.mean()
    if davg <= 0:
        return np.full(distances.shape, beta)
    return beta * np.clip(1.0 - distances / (2.0 * davg), 0.0, 1.0)


def inject_boundary(
    scene: Scene,
    beta: float,
    seed: int,
    index: ISpatialIndex,
    k: int = BOUNDARY_NOISE_K,
    max_fruitless_iterations: int = DEFAULT_MAX_FRUITLESS_ITERATIONS,
) -> np.ndarray:
    """
    Morphological label noise around class boundaries (erosion / dilation).

    Loop until the number of points with a label different from the clean one
    reaches the threshold: sample a class uniformly among those present, a
    point of that class, and if its k-NN holds another class, relabel a
    distance-weighted random subset of its neighbors to its class.
    """
    _check_rate(beta, "beta")
    labels = scene.require_labels()
    model = BoundaryNoiseModel.build(labels, index, k)
    threshold = model.threshold(beta)

    rng = np.random.default_rng(seed)
    classes = np.unique(labels)
    members = {int(c): np.flatnonzero(labels == c) for c in classes}
    noisy = labels.copy()
    noisy_count = 0
    fruitless = 0

    while noisy_count < threshold:
        y = int(classes[rng.integers(classes.size)])
        i = int(members[y][rng.integers(members[y].size)])
        if model.is_boundary[i]:
            nn = model.neighbors[i]
            flip = rng.random(nn.size) < flip_probabilities(model.distances[i], beta)
            # relabelling a neighbor to its own clean class is not a flip
            flip &= labels[nn] != labels[i]
            noisy[nn[flip]] = labels[i]
            updated = int((noisy != labels).sum())
            progressed = updated > noisy_count
            noisy_count = updated
        else:
            progressed = False

        fruitless = 0 if progressed else fruitless + 1
        if fruitless >= max_fruitless_iterations:
            raise NoiseInjectionError(
                f"boundary noise stalled after {fruitless} fruitless iterations "
                f"({noisy_count}/{threshold} noisy points)",
                details={
                    "scene": scene.name,
                    "boundary_points": int(model.is_boundary.sum()),
                    "threshold": threshold,
                },
            )
    return noisy


def boundary_flip_report(scene: Scene, noisy: np.ndarray, requested: float) -> NoiseReport:
    labels = scene.require_labels()
    flipped = int((noisy != labels).sum())
    return NoiseReport(
        requested_rate=requested,
        measured_rate=flipped / labels.size,
        flipped_points=flipped,
        unit="point",
        total_units=int(labels.size),
        flipped_units=flipped,
    )


def choose_scenes(scene_count: int, alpha: float, seed: int) -> np.ndarray:
    """round(alpha * n) scene indices (half rounds up), sorted, without replacement."""
    _check_rate(alpha, "alpha")
    if scene_count < 1:
        raise ValidationError("scene list must not be empty", field="scenes")
    chosen = int(math.floor(alpha * scene_count + 0.5))
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(scene_count, size=chosen, replace=False))


def inject_dataset_boundary(
    scenes: List[Scene],
    alpha: float,
    beta: float,
    seed: int,
    indexes: List[ISpatialIndex],
    k: int = BOUNDARY_NOISE_K,
) -> List[np.ndarray]:
    """Boundary noise on a seeded alpha-fraction of scenes; others keep their labels."""
    chosen = set(choose_scenes(len(scenes), alpha, derive_seed(seed, "scene-choice")).tolist())
    noisy: List[np.ndarray] = []
    for position, (scene, index) in enumerate(zip(scenes, indexes)):
        if position in chosen:
            scene_seed = derive_seed(seed, f"scene-{position}")
            noisy.append(inject_boundary(scene, beta, scene_seed, index, k))
        else:
            noisy.append(scene.require_labels().copy())
    return noisy


# ---------------------------------------------------------------------------
# spec dispatch
# ---------------------------------------------------------------------------


def apply_instance_noise(scene: Scene, spec: NoiseSpec, seed: int, unpaired_rate: Optional[float] = None) -> np.ndarray:
    """Instance-level part of a NoiseSpec for one scene."""
    spec.validate_classes(scene.class_count)
    if spec.kind in (NoiseKind.SYMMETRIC, NoiseKind.MIXED_INSTANCE_BOUNDARY):
        return inject_symmetric(scene, spec.tau, seed)
    if spec.kind is NoiseKind.ASYMMETRIC_PAIRS:
        return inject_asymmetric_pairs(scene, spec.tau_pair, spec.pairs, seed)
    if spec.kind is NoiseKind.MIXED_ASYMMETRIC:
        return inject_mixed_asymmetric(scene, spec.tau, spec.tau_pair, spec.pairs, seed, unpaired_rate)
    raise ValidationError(f"{spec.kind.value} is not an instance-level noise kind", field="kind")


def _check_rate(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {value}", field=name)


def _checked_pairs(pairs: Pairs, class_count: int) -> Tuple[Tuple[int, int], ...]:
    spec = NoiseSpec(kind=NoiseKind.ASYMMETRIC_PAIRS, pairs=tuple(tuple(p) for p in pairs))
    spec.validate_classes(class_count)
    return spec.pairs
