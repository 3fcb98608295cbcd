"""Application layer - Use cases, DTOs, and application services."""
