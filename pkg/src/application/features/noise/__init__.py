"""Noise feature - Synthetic label corruption of labelled datasets."""
