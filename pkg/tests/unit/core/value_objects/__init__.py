"""
Unit tests for value objects.

This package contains unit tests for ModelParams, StateVector and Scenario.
"""
