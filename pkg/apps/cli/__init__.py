"""
Command-line interface of the simulator.
"""
