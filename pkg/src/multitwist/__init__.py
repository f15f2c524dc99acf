"""Exact invariants of multitwist groups built from filling pairs of multicurves."""

__version__ = "0.1.0"
