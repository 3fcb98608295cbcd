"""Constants and enums shared across the application."""

from enum import Enum


class NoiseKind(str, Enum):
    """Synthetic label-noise models."""

    SYMMETRIC = "symmetric"
    ASYMMETRIC_PAIRS = "asymmetric_pairs"
    MIXED_ASYMMETRIC = "mixed_asymmetric"
    BOUNDARY = "boundary"
    MIXED_INSTANCE_BOUNDARY = "mixed_instance_boundary"

    @property
    def needs_instances(self) -> bool:
        return self is not NoiseKind.BOUNDARY


class PipelineKind(str, Enum):
    """Training pipelines."""

    CE = "ce"
    PNAL = "pnal"
    PNAL_BOUNDARY = "pnal_boundary"
    MIXED = "mixed"


class TrainingPhase(str, Enum):
    """Phase tag written to the epoch log."""

    WARMUP = "warmup"
    CE = "ce"
    CLEAN = "clean"
    BOUNDARY = "boundary"


class ClusteringMethod(str, Enum):
    """Correction-unit producers."""

    DBSCAN = "dbscan"
    INSTANCE = "instance"


# Spatial partitioning
DEFAULT_BLOCK_SIZE = 1.0
DEFAULT_BLOCK_STRIDE = 0.5
DEFAULT_BLOCK_POINTS = 4096
DEFAULT_BATCH_POINTS = 1024

# Clustering
DEFAULT_DBSCAN_EPS = 0.018
DEFAULT_DBSCAN_MIN_PTS = 10

# Cleaning
DEFAULT_HISTORY_LENGTH = 4
DEFAULT_SIGMA = 0.05
DEFAULT_GAMMA = 4.0
DEFAULT_BOUNDARY_K = 20

# Noise
BOUNDARY_NOISE_K = 80
DEFAULT_MAX_FRUITLESS_ITERATIONS = 50_000

# Training
DEFAULT_TOTAL_EPOCHS = 30
DEFAULT_WARMUP_EPOCHS = 5
DEFAULT_BOUNDARY_EPOCHS = 10
DEFAULT_LEARNING_RATE = 0.1
PROBABILITY_FLOOR = 1e-12
FEATURE_NEIGHBORS = 8

# Scene text format
SCENE_FLOAT_FORMAT = "%.6f"
