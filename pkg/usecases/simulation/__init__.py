"""
Simulation and analysis use cases.
"""
