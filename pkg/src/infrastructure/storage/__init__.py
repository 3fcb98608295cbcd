"""Local artifact storage."""

from src.infrastructure.storage.report_writer import (
    JsonLinesWriter,
    read_json,
    write_json,
    write_lines,
)
from src.infrastructure.storage.scene_repository import (
    MANIFEST_NAME,
    FileSceneRepository,
    read_labelled_points,
    read_labels,
)

__all__ = [
    "MANIFEST_NAME",
    "FileSceneRepository",
    "JsonLinesWriter",
    "read_json",
    "read_labelled_points",
    "read_labels",
    "write_json",
    "write_lines",
]
