"""Utility modules for the down-up engine."""
