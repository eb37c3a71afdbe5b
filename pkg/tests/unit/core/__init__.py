"""
Unit tests for core domain layer.

This package contains unit tests for entities, value objects and the
model rate functions.
"""
