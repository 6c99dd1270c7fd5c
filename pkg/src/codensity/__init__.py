"""Exact finite computations around codensity monads, monad completion and free simplicial monoids."""

__version__ = "0.1.0"
