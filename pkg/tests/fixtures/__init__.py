"""Test fixtures."""

from tests.fixtures.builders import (
    ColorOraclePredictor,
    blob,
    line_scene,
    make_scene,
    small_spec,
)

__all__ = ["ColorOraclePredictor", "blob", "line_scene", "make_scene", "small_spec"]
