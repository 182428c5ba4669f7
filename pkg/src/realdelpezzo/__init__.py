"""Topology of real degree-one del Pezzo surfaces with Du Val singularities."""

__version__ = "0.1.0"
