"""Exact-arithmetic workbench for curves on quadrics and cuspidal projections."""

__version__ = "0.1.0"
