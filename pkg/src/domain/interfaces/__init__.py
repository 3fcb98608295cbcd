"""Domain interfaces - Repository and service contracts."""

from src.domain.interfaces.repositories import ISceneRepository
from src.domain.interfaces.services import IClusterer, IPredictor, ISpatialIndex

__all__ = [
    # Repositories
    "ISceneRepository",
    # Services
    "IClusterer",
    "IPredictor",
    "ISpatialIndex",
]
