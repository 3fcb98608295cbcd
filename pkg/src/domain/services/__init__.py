"""Domain services - Pure algorithms over scenes and labels."""

from src.domain.services.boundary import (
    band_from_neighbors,
    boundary_cleaning_epoch,
    extract_boundary,
)
from src.domain.services.label_voting import (
    VotingOutcome,
    clean_scene,
    eligible_clusters,
    vote_cluster,
)
from src.domain.services.metrics import (
    CorrectionStats,
    correction_stats,
    edge_inner_accuracy,
    evaluate,
    mean_iou,
    overall_accuracy,
)
from src.domain.services.noise_injection import (
    NoiseReport,
    inject_asymmetric_pairs,
    inject_boundary,
    inject_dataset_boundary,
    inject_mixed_asymmetric,
    inject_symmetric,
)
from src.domain.services.partitioning import block_partition, sample_block
from src.domain.services.scene_synthesis import generate_dataset, generate_scene

__all__ = [
    "CorrectionStats",
    "NoiseReport",
    "VotingOutcome",
    "band_from_neighbors",
    "block_partition",
    "boundary_cleaning_epoch",
    "clean_scene",
    "correction_stats",
    "edge_inner_accuracy",
    "eligible_clusters",
    "evaluate",
    "extract_boundary",
    "generate_dataset",
    "generate_scene",
    "inject_asymmetric_pairs",
    "inject_boundary",
    "inject_dataset_boundary",
    "inject_mixed_asymmetric",
    "inject_symmetric",
    "mean_iou",
    "overall_accuracy",
    "sample_block",
    "vote_cluster",
]
