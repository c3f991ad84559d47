"""Exact analysis of invariant algebraic surfaces of polynomial vector fields."""

__version__ = "0.1.0"
