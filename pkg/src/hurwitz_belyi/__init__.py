"""Hurwitz-Belyi maps: fibers, braid monodromy, lifting invariants and exact Belyi map checks."""

from __future__ import annotations

__version__ = "0.1.0"

__all__ = [
    "belyi_verify",
    "bigpoly",
    "braid_engine",
    "clan",
    "class_algebra",
    "cli",
    "group_atlas",
    "lifting",
    "nielsen",
    "perm_core",
]
