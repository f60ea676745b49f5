"""Finite laboratory for generalized Borel hierarchies at a singular cardinal."""

__version__ = "0.1.0"
