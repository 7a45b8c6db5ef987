"""Exact Jacobi-Trudi characters for classical quantum affine types."""

__version__ = "0.1.0"
