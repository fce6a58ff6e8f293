"""Quasi-total Roman domination: exact solvers, greedy construction, graph families and bound checks."""

__version__ = "0.1.0"
