"""
Integration tests for the simulator.

End-to-end CLI runs and cross-engine agreement checks.
"""
