"""
Unit tests for use cases.

This package contains unit tests for configuration parsing and the
simulation use cases, with the result repository mocked.
"""
