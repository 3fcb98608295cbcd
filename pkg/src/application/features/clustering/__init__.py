"""Clustering feature - Correction-unit dumps for inspection."""
