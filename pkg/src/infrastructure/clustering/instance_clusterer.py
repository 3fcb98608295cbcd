"""Ground-truth instance clusters (upper bound for voting)."""

from src.domain.entities.cluster_set import ClusterSet
from src.domain.entities.scene import Scene
from src.domain.interfaces.services import IClusterer


class InstanceClusterer(IClusterer):
    """One cluster per annotated instance id."""

    def cluster(self, scene: Scene) -> ClusterSet:
        return ClusterSet.from_assignment(scene.require_instances())
