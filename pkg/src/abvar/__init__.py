"""Exact Euler characteristics and point-count moments for fiber powers of universal abelian varieties, g <= 3."""

__version__ = "0.1.0"
