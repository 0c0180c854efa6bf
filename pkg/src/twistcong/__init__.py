"""Congruences of twisted partition monoids."""

__version__ = "0.1.0"
