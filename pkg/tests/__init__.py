"""
Test suite for the naive T cell repertoire simulator.

Unit tests cover the domain layer, the engines, the use cases and the
result repository; integration tests drive the CLI and compare engines.
"""
