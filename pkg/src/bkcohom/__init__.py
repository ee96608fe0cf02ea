"""Exact computation of deformed cup products on H*(G/P) via relative Lie algebra cohomology."""

__version__ = "0.1.0"
