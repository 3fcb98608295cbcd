"""Application features - Feature-based organization of use cases."""
