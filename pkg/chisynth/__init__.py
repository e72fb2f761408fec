"""Exact synthesis of qutrit Clifford+R circuits over Z[1/chi]."""

__version__ = "1.0.0"
