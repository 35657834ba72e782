"""
Schur Ring Engine

This package contains the Schur ring engine: finite groups, lattices of
characteristic subgroups, S-ring constructions and their automorphism groups.
"""

__version__ = "1.0.0"
