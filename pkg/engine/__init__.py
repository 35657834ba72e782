"""Engine package for the Schur ring laboratory."""

__version__ = "1.0.0"
