"""Evaluation feature - Metric tables and dataset statistics."""
