"""
Deterministic synthetic rooms.

Surfaces are sampled, not volumes: floor patches (class 0), wall panels
(class 1 when at least three classes exist) and furniture-like boxes for every
other class. With the contact flag, boxes stand on the floor and walls rise
from it, so classes meet along real boundaries. Floor under a box footprint is
left empty, as a scanner would never see it."""

import colorsys
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.core.concurrency import parallel_map
from src.core.exceptions import ValidationError
from src.core.randomness import derive_seed
from src.domain.entities.scene import Scene
from src.domain.value_objects.synth_spec import SynthSpec

FLOOR_CLASS = 0
WALL_CLASS = 1

# box footprint and height as fractions of the cell size / room height
_BOX_WIDTH_RANGE = (0.45, 0.8)
_BOX_HEIGHT_RANGE = (0.25, 0.6)
_LIFT_FRACTION = 0.2


@dataclass(frozen=True)
class RoomGrid:
    """Cell grid of the room floor plus its perimeter wall segments."""

    nx: int
    ny: int
    cell: float
    extent: Tuple[float, float, float]

    @property
    def cell_count(self) -> int:
        return self.nx * self.ny

    @property
    def segment_count(self) -> int:
        return 2 * (self.nx + self.ny)

    def snake_order(self) -> List[Tuple[int, int]]:
        """Cells row by row, alternating direction, so consecutive cells touch."""
        order = []
        for j in range(self.ny):
            row = range(self.nx) if j % 2 == 0 else range(self.nx - 1, -1, -1)
            order.extend((i, j) for i in row)
        return order


@dataclass(frozen=True)
class _Box:
    x0: float
    y0: float
    w: float
    d: float
    h: float

    @property
    def footprint(self) -> Tuple[float, float, float, float]:
        return (self.x0, self.y0, self.x0 + self.w, self.y0 + self.d)


def class_colors(class_count: int) -> np.ndarray:
    """Base colors spread evenly around the hue wheel."""
    return np.array(
        [colorsys.hsv_to_rgb(m / class_count, 0.75, 0.85) for m in range(class_count)]
    )


def generate_scene(spec: SynthSpec, name: str = "scene") -> Scene:
    """One room with clean labels and instance ids, a pure function of ``spec``."""
    grid = _room_grid(spec)
    wall_count = spec.instances_per_class if spec.class_count >= 3 else 0
    box_classes = [m for m in range(spec.class_count) if m not in (FLOOR_CLASS, WALL_CLASS)]
    if spec.class_count == 2:
        box_classes = [WALL_CLASS]
    box_count = len(box_classes) * spec.instances_per_class
    _check_packing(spec, grid, wall_count, box_count)

    rng = np.random.default_rng(spec.seed)
    n = spec.points_per_instance
    lift = 0.0 if spec.contact else _LIFT_FRACTION * grid.cell
    segments = np.sort(rng.choice(grid.segment_count, size=wall_count, replace=False))
    box_cells = rng.choice(grid.cell_count, size=box_count, replace=False)
    boxes = [_place_box(rng, grid, divmod(int(c), grid.ny)) for c in box_cells]
    footprints = np.array([box.footprint for box in boxes]).reshape(-1, 4)

    positions: List[np.ndarray] = []
    labels: List[np.ndarray] = []
    instances: List[np.ndarray] = []

    def emit(points: np.ndarray, label: int) -> None:
        labels.append(np.full(n, label, dtype=np.int64))
        instances.append(np.full(n, len(positions), dtype=np.int64))
        positions.append(points)

    cells = grid.snake_order()
    for chunk in np.array_split(np.arange(len(cells)), spec.instances_per_class):
        emit(_sample_floor(rng, [cells[c] for c in chunk], grid.cell, n, footprints), FLOOR_CLASS)

    for segment in segments:
        emit(_sample_wall(rng, grid, int(segment), lift, n), WALL_CLASS)

    slot = 0
    for label in box_classes:
        for _ in range(spec.instances_per_class):
            emit(_sample_box(rng, boxes[slot], lift, n), label)
            slot += 1

    label_array = np.concatenate(labels)
    base = class_colors(spec.class_count)[label_array]
    colors = np.clip(base + rng.normal(0.0, spec.color_noise, base.shape), 0.0, 1.0)
    return Scene(
        positions=np.concatenate(positions),
        colors=colors,
        class_count=spec.class_count,
        labels=label_array,
        instance_ids=np.concatenate(instances),
        name=name,
    )


def generate_dataset(
    spec: SynthSpec, scene_count: int, seed: int, workers: int = 1
) -> List[Scene]:
    """``scene_count`` independent rooms with sub-seeds derived from ``seed``."""
    if scene_count < 1:
        raise ValidationError("scene_count must be at least 1", field="scene_count")
    jobs = [
        (spec.with_seed(derive_seed(seed, f"scene-{k}")), f"scene_{k:03d}")
        for k in range(scene_count)
    ]
    return parallel_map(lambda job: generate_scene(*job), jobs, workers=workers)


def _room_grid(spec: SynthSpec) -> RoomGrid:
    ex, ey, _ = spec.room_extent
    nx = int(math.floor(ex / spec.cell_size + 1e-9))
    ny = int(math.floor(ey / spec.cell_size + 1e-9))
    return RoomGrid(nx=nx, ny=ny, cell=spec.cell_size, extent=spec.room_extent)


def _check_packing(spec: SynthSpec, grid: RoomGrid, wall_count: int, box_count: int) -> None:
    problems = []
    if grid.cell_count < max(1, spec.instances_per_class):
        problems.append(f"{spec.instances_per_class} floor patches need as many cells")
    if box_count > grid.cell_count:
        problems.append(f"{box_count} boxes need as many cells")
    if wall_count > grid.segment_count:
        problems.append(f"{wall_count} wall panels need as many perimeter segments")
    if problems:
        raise ValidationError(
            f"infeasible packing for a {grid.nx} x {grid.ny} cell room: " + "; ".join(problems),
            field="synth",
            cells=grid.cell_count,
            segments=grid.segment_count,
        )


def _sample_floor(
    rng: np.random.Generator,
    cells: List[Tuple[int, int]],
    cell: float,
    n: int,
    footprints: np.ndarray,
) -> np.ndarray:
    """Floor of the given cells; ground covered by a box footprint is never sampled."""
    corners = np.array(cells, dtype=np.float64) * cell
    kept: List[np.ndarray] = []
    count = 0
    while count < n:
        picks = rng.integers(0, len(cells), size=n)
        xy = corners[picks] + rng.random((n, 2)) * cell
        xy = xy[~_under_boxes(xy, footprints)]
        kept.append(xy)
        count += xy.shape[0]
    xy = np.concatenate(kept)[:n]
    return np.column_stack([xy, np.zeros(n)])


def _under_boxes(xy: np.ndarray, footprints: np.ndarray) -> np.ndarray:
    if footprints.size == 0:
        return np.zeros(xy.shape[0], dtype=bool)
    x, y = xy[:, 0:1], xy[:, 1:2]
    inside = (
        (x >= footprints[:, 0]) & (x <= footprints[:, 2])
        & (y >= footprints[:, 1]) & (y <= footprints[:, 3])
    )
    return inside.any(axis=1)




def _sample_wall(rng: np.random.Generator, grid: RoomGrid, segment: int, lift: float, n: int) -> np.ndarray:
    """Vertical panel over one cell-long stretch of the room perimeter."""
    ex, ey, ez = grid.nx * grid.cell, grid.ny * grid.cell, grid.extent[2]
    along = rng.random(n) * grid.cell
    z = lift + rng.random(n) * (ez - lift)
    if segment < grid.nx:
        x, y = segment * grid.cell + along, np.zeros(n)
    elif segment < 2 * grid.nx:
        x, y = (segment - grid.nx) * grid.cell + along, np.full(n, ey)
    elif segment < 2 * grid.nx + grid.ny:
        x, y = np.zeros(n), (segment - 2 * grid.nx) * grid.cell + along
    else:
        x, y = np.full(n, ex), (segment - 2 * grid.nx - grid.ny) * grid.cell + along
    return np.column_stack([x, y, z])


def _place_box(rng: np.random.Generator, grid: RoomGrid, cell_index: Tuple[int, int]) -> _Box:
    w, d = rng.uniform(*_BOX_WIDTH_RANGE, size=2) * grid.cell
    h = rng.uniform(*_BOX_HEIGHT_RANGE) * grid.extent[2]
    x0 = cell_index[0] * grid.cell + rng.random() * (grid.cell - w)
    y0 = cell_index[1] * grid.cell + rng.random() * (grid.cell - d)
    return _Box(x0=x0, y0=y0, w=w, d=d, h=h)


def _sample_box(rng: np.random.Generator, box: _Box, lift: float, n: int) -> np.ndarray:
    """Top and four sides of a box; the hidden bottom is skipped."""
    x0, y0, w, d, h = box.x0, box.y0, box.w, box.d, box.h
    areas = np.array([w * d, w * h, w * h, d * h, d * h])
    face = rng.choice(5, size=n, p=areas / areas.sum())
    u, v = rng.random(n), rng.random(n)
    points = np.empty((n, 3))
    top, front, back, left, right = (face == f for f in range(5))

    points[top] = np.column_stack([x0 + u[top] * w, y0 + v[top] * d, np.full(top.sum(), h)])
    points[front] = np.column_stack([x0 + u[front] * w, np.full(front.sum(), y0), v[front] * h])
    points[back] = np.column_stack([x0 + u[back] * w, np.full(back.sum(), y0 + d), v[back] * h])
    points[left] = np.column_stack([np.full(left.sum(), x0), y0 + u[left] * d, v[left] * h])
    points[right] = np.column_stack([np.full(right.sum(), x0 + w), y0 + u[right] * d, v[right] * h])
    points[:, 2] += lift
    return points
