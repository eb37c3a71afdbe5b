"""
Environment configuration of the simulator.
"""
