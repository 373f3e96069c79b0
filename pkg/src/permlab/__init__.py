"""Exact enumeration and verification toolkit for Eulerian-type permutation statistics."""

__version__ = "0.1.0"
