"""
Unit tests for infrastructure layer.

This package contains unit tests for the delimited-text result repository.
"""
