"""Synthesis feature - Deterministic synthetic datasets."""
