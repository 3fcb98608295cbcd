"""JSON, JSON-lines and plain-text artifact writers."""

from pathlib import Path
from typing import Any, Iterable, Optional

import orjson

from src.core.exceptions import DataFormatError, StorageError

REPORT_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY
LINE_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY


def write_json(path: Path, data: Any) -> Path:
    """Write a sorted, indented JSON document ending in a newline."""
    return _write_bytes(Path(path), orjson.dumps(data, option=REPORT_OPTIONS) + b"\n")


def read_json(path: Path) -> Any:
    path = Path(path)
    try:
        return orjson.loads(path.read_bytes())
    except FileNotFoundError as e:
        raise StorageError(message=f"File not found: {path}", path=str(path)) from e
    except OSError as e:
        raise StorageError(message=f"Failed to read file: {e}", path=str(path)) from e
    except orjson.JSONDecodeError as e:
        raise DataFormatError(message=f"Invalid JSON: {e}", path=str(path)) from e


def write_lines(path: Path, lines: Iterable[str]) -> Path:
    """Write text lines, one per row, newline-terminated."""
    body = "".join(f"{line}\n" for line in lines)
    return _write_bytes(Path(path), body.encode("utf-8"))


class JsonLinesWriter:
    """Appends one compact JSON object per line; truncates the file on open."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._handle: Optional[Any] = None

    def __enter__(self) -> "JsonLinesWriter":
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._handle = self.path.open("wb")
        except OSError as e:
            raise StorageError(message=f"Failed to open log: {e}", path=str(self.path)) from e
        return self

    def write(self, record: Any) -> None:
        if self._handle is None:
            raise StorageError(message="log writer is not open", path=str(self.path))
        self._handle.write(orjson.dumps(record, option=LINE_OPTIONS) + b"\n")

    def __exit__(self, *exc: Any) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None


def _write_bytes(path: Path, payload: bytes) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
    except OSError as e:
        raise StorageError(message=f"Failed to write file: {e}", path=str(path)) from e
    return path
