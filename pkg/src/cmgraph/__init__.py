"""Exact tools for Cohen-Macaulayness of graphs via independence complexes.

Everything here is deterministic and exact: integer arithmetic only, no
floating point, no randomness, canonical ordering of every output.
"""

__version__ = "0.1.0"
