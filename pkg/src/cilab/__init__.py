"""Curvature-invariant subspace laboratory for the oriented 2-plane Grassmannian."""

__version__ = "0.1.0"
