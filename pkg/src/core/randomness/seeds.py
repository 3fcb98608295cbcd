"""Seed derivation: one root seed split per subsystem.

A subsystem seed is ``SeedSequence([root, crc32(tag)])`` reduced to a 63-bit
integer. Tags are plain strings such as ``"noise"`` or ``"scene-3"``; nested
subsystems chain derivations (``derive_seed(derive_seed(root, "noise"), "scene-3")``).
"""

import zlib

import numpy as np


def derive_seed(root: int, tag: str) -> int:
    """Derive a child seed from a root seed and a subsystem tag."""
    if root < 0:
        raise ValueError("seed must be non-negative")
    sequence = np.random.SeedSequence([int(root), zlib.crc32(tag.encode("utf-8"))])
    return int(sequence.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


def make_rng(root: int, tag: str | None = None) -> np.random.Generator:
    """Build a numpy Generator for ``root`` or for its ``tag`` subsystem."""
    seed = root if tag is None else derive_seed(root, tag)
    return np.random.default_rng(seed)
