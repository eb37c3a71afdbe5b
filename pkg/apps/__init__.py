"""
Application packages.
"""
