"""
Value objects of the simulator.

Parameters, states, scenarios and run settings are immutable and
defined entirely by their attributes.
"""
