"""
Unit tests for the simulator.

This package contains unit tests for value objects, entities, rate
functions, engines and use cases.
"""
