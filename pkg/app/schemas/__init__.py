"""Pydantic models for games, solver and experiment configuration, and trajectories."""
