"""Binomial ideals of polyocollections and closed path polyominoes."""

__version__ = "0.1.0"
