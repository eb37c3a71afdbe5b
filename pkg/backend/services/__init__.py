"""
Services module for the simulation backend.

Contains the deterministic and stochastic engines and result analysis.
"""
