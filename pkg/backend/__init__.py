"""
Simulation backend of the naive T cell repertoire simulator.

This module contains the ODE and agent-based engines and the analysis
services built on top of them.
"""

__version__ = "1.0.0"
__description__ = "Dual-paradigm naive T cell repertoire simulation engines"
