"""
Configuration use cases.
"""
