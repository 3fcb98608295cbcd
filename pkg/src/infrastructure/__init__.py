"""Infrastructure layer - Spatial index, clusterers and file storage."""
