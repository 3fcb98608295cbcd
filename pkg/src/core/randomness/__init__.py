"""Seed derivation utilities."""

from src.core.randomness.seeds import derive_seed, make_rng

__all__ = ["derive_seed", "make_rng"]
