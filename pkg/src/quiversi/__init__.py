"""Combinatorics of quiver semi-invariants: generic ext/hom, stability, cone faces and LR coefficients."""

__version__ = "0.1.0"
