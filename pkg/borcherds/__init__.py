"""
Borcherds congruences package.

Exact q-series arithmetic, weight 1/2 plus-space forms, twisted Borcherds
products and their logarithmic derivatives, and linear congruences between
those derivatives modulo prime powers.
"""

__version__ = "1.0.0"
__author__ = "Borcherds congruences contributors"

from .errors import BorcherdsError

__all__ = ["__version__", "BorcherdsError"]
