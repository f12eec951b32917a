"""Exact incidence geometry over fields of characteristic zero."""

__version__ = "0.1.0"
