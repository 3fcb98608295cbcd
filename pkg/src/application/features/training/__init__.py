"""Training feature - Noisy-label training runs and their artifacts."""
