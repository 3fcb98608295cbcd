"""Repository interfaces - Data access contracts."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.domain.entities.scene import Scene


class ISceneRepository(ABC):
    """Reads and writes datasets of scenes."""

    @abstractmethod
    def load_scene(self, path: Path, class_count: Optional[int] = None) -> Scene:
        """Load one scene file."""

    @abstractmethod
    def save_scene(self, scene: Scene, path: Path) -> Path:
        """Write one scene file, returning its path."""

    @abstractmethod
    def load_dataset(self, location: Path) -> List[Scene]:
        """Load every scene listed by a manifest (file or containing directory)."""

    @abstractmethod
    def save_dataset(
        self,
        scenes: List[Scene],
        directory: Path,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> Path:
        """Write scenes and a manifest, returning the manifest path."""
