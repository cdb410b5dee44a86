"""Integral cohomology of E6, E7, E8 flag manifolds and Chow rings of the split groups."""

__version__ = "0.1.0"
