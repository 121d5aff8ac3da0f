"""Exact highest weight vectors for super Howe dualities."""

__version__ = "0.1.0"
