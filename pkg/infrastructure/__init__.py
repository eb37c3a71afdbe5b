"""
Infrastructure layer for the T cell repertoire simulator.

Concrete implementations of the interfaces, such as file-based result
repositories.
"""
