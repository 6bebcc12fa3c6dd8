"""Exact arithmetic with integral symplectic involutions and principally polarized period matrices."""

__version__ = "0.1.0"
