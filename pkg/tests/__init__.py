"""Test suite for cloudclean."""
