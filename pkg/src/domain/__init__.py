"""Domain layer - Core business logic, entities, and interfaces."""
