"""Polynomial representations of GL2 and SL2 over arbitrary fields."""
