"""
Exact q-series arithmetic.

This package contains the coefficient rings, the ExactSeries value type
and its operations, and the text format used by the command line.
"""

from .rings import (
    QQ,
    ZZ,
    CoefficientRing,
    Integers,
    QuadExt,
    QuadNumber,
    Rationals,
    Residues,
)
from .series import (
    ExactSeries,
    add,
    agree,
    change_ring,
    constant,
    d_operator,
    dilate,
    exp_series,
    invert,
    log_series,
    monomial,
    mul,
    mul_dilated,
    neg,
    one,
    pow_int,
    reduce_mod,
    scale,
    shift,
    sub,
    truncate,
    zero,
)
from .text import parse_series, render_series

__all__ = [
    "QQ",
    "ZZ",
    "CoefficientRing",
    "Integers",
    "QuadExt",
    "QuadNumber",
    "Rationals",
    "Residues",
    "ExactSeries",
    "add",
    "agree",
    "change_ring",
    "constant",
    "d_operator",
    "dilate",
    "exp_series",
    "invert",
    "log_series",
    "monomial",
    "mul",
    "mul_dilated",
    "neg",
    "one",
    "pow_int",
    "reduce_mod",
    "scale",
    "shift",
    "sub",
    "truncate",
    "zero",
    "parse_series",
    "render_series",
]
