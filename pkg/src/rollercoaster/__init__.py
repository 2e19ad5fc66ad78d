"""Rollercoaster algorithms."""
