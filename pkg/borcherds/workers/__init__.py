"""
Parallel assembly of congruence-matrix columns.
"""

from .manager import ColumnPool

__all__ = ["ColumnPool"]
