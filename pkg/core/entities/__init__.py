"""
Domain entities of the simulator.

Trajectories, agent populations, ensemble statistics and analysis reports.
"""
