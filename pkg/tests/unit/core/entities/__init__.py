"""
Unit tests for domain entities.

This package contains unit tests for Trajectory, AgentPopulation,
EnsembleStats and the report entities.
"""
