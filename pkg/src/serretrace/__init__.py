"""Exact trace-formula computations for curves over discretely valued fields."""

__version__ = "0.1.0"
