"""Chorded cycles in small graphs: detection, disjoint packing and verification."""

__version__ = "0.1.0"
