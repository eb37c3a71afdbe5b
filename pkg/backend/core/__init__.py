"""
Runtime settings, logging and service exceptions of the simulation backend.
"""

__version__ = "1.0.0"
