"""
Concrete repository implementations.
"""
