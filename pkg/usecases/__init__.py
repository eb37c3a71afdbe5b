"""
Use cases layer for the T cell repertoire simulator.

Application logic that combines the engines, the analyses and the result
repository to carry out one CLI operation each.
"""
