"""
Repository interfaces.

Abstract persistence contracts implemented in infrastructure/repositories.
"""
