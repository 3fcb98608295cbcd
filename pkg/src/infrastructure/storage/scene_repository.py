"""Scene text files and dataset manifests on the local filesystem."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.core.config.constants import SCENE_FLOAT_FORMAT
from src.core.exceptions import DataFormatError, StorageError, ValidationError
from src.core.observability import get_logger
from src.domain.entities.scene import Scene
from src.domain.interfaces.repositories import ISceneRepository
from src.infrastructure.storage.report_writer import read_json, write_json

logger = get_logger(__name__)

MANIFEST_NAME = "manifest.json"
MANIFEST_FORMAT = "cloudclean-scenes"
SCENE_SUFFIX = ".txt"


class FileSceneRepository(ISceneRepository):
    """
    Reads and writes the whitespace scene format ``x y z r g b [label] [instance]``.

    Colors are read as 0-255 integers or 0-1 reals (0-255 when any component
    exceeds 1) and always written as 0-1 reals. ``#`` lines are comments.
    """

    def load_scene(self, path: Path, class_count: Optional[int] = None) -> Scene:
        path = Path(path)
        table = _read_table(path)
        columns = table.shape[1]
        if columns not in (6, 7, 8):
            raise DataFormatError(
                message=f"expected 6, 7 or 8 columns, found {columns}", path=str(path)
            )

        colors = table[:, 3:6]
        if colors.max() > 1.0:
            colors = colors / 255.0
        labels = _integer_column(table, 6, path) if columns >= 7 else None
        instances = _integer_column(table, 7, path) if columns == 8 else None
        if class_count is None:
            class_count = max(2, int(labels.max()) + 1) if labels is not None else 2

        try:
            return Scene(
                positions=table[:, :3],
                colors=colors,
                class_count=class_count,
                labels=labels,
                instance_ids=instances,
                name=path.stem,
            )
        except ValidationError as e:
            raise DataFormatError(message=f"invalid scene: {e.message}", path=str(path)) from e

    def save_scene(self, scene: Scene, path: Path) -> Path:
        path = Path(path)
        columns = [scene.positions, scene.colors]
        fmt = [SCENE_FLOAT_FORMAT] * 6
        header = "x y z r g b"
        if scene.has_labels:
            columns.append(scene.labels[:, None])
            fmt.append("%d")
            header += " label"
        if scene.has_instances:
            columns.append(scene.instance_ids[:, None])
            fmt.append("%d")
            header += " instance"

        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            np.savetxt(path, np.hstack(columns), fmt=fmt, header=header, comments="# ")
        except OSError as e:
            raise StorageError(message=f"Failed to write scene: {e}", path=str(path)) from e
        return path

    def load_dataset(self, location: Path) -> List[Scene]:
        location = Path(location)
        if location.is_dir():
            location = location / MANIFEST_NAME
        if location.suffix != ".json":
            return [self.load_scene(location)]

        manifest = read_json(location)
        if not isinstance(manifest, dict) or manifest.get("format") != MANIFEST_FORMAT:
            raise DataFormatError(message="not a scene manifest", path=str(location))
        class_count = int(manifest["class_count"])
        scenes = [
            self.load_scene(location.parent / entry["file"], class_count)
            for entry in manifest["scenes"]
        ]
        logger.info("dataset_loaded", manifest=str(location), scenes=len(scenes))
        return scenes

    def save_dataset(
        self,
        scenes: List[Scene],
        directory: Path,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> Path:
        if not scenes:
            raise ValidationError("cannot save an empty dataset", field="scenes")
        directory = Path(directory)
        class_count = scenes[0].class_count
        entries = []
        for scene in scenes:
            if scene.class_count != class_count:
                raise ValidationError("all scenes of a dataset share one class count")
            file_name = f"{scene.name}{SCENE_SUFFIX}"
            self.save_scene(scene, directory / file_name)
            entries.append(
                {
                    "name": scene.name,
                    "file": file_name,
                    "points": scene.point_count,
                    "labels": scene.has_labels,
                    "instances": scene.has_instances,
                }
            )

        manifest = {
            "format": MANIFEST_FORMAT,
            "class_count": class_count,
            "scenes": entries,
            "metadata": metadata or {},
        }
        path = write_json(directory / MANIFEST_NAME, manifest)
        logger.info("dataset_saved", directory=str(directory), scenes=len(scenes))
        return path


def read_labels(path: Path) -> np.ndarray:
    """
    Per-point labels from a one-column label file or a labelled scene file.

    Labels align with points by line order.
    """
    return read_labelled_points(path)[0]


def read_labelled_points(path: Path) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """Labels plus the positions they were written against, when the file has them."""
    path = Path(path)
    table = _read_table(path)
    if table.shape[1] == 1:
        return _integer_column(table, 0, path), None
    if table.shape[1] >= 7:
        return _integer_column(table, 6, path), table[:, :3]
    raise DataFormatError(message="file carries no label column", path=str(path))


def _read_table(path: Path) -> np.ndarray:
    if not path.exists():
        raise StorageError(message=f"File not found: {path}", path=str(path))
    try:
        table = np.loadtxt(path, comments="#", ndmin=2, encoding="utf-8")
    except OSError as e:
        raise StorageError(message=f"Failed to read file: {e}", path=str(path)) from e
    except ValueError as e:
        raise DataFormatError(message=f"malformed point file: {e}", path=str(path)) from e
    if table.size == 0:
        raise DataFormatError(message="file holds no points", path=str(path))
    return table


def _integer_column(table: np.ndarray, column: int, path: Path) -> np.ndarray:
    values = table[:, column]
    if not np.all(values == np.round(values)):
        raise DataFormatError(message=f"column {column} must hold integers", path=str(path))
    return values.astype(np.int64)
