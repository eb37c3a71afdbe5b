"""
Interfaces layer for the T cell repertoire simulator.

Abstract contracts (ports) for result persistence.
"""
