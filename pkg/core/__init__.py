"""
Core domain layer of the naive T cell repertoire simulator.

This package contains the model parameters, compartment states, rate
functions and result entities shared by both simulation engines. It is
independent of I/O and of the command-line surface.
"""
