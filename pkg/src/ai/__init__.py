"""AI module - Predictors, training loop and pipelines."""
