#!/usr/bin/env python3
"""
Per-discriminant columns of the congruence matrix.
"""

from typing import List, Optional

from ..modforms import PlusSpaceForm
from ..products import LhatContext, lhat, log_deriv
from ..qseries import ExactSeries
from .certificate import SearchConfig


def column_series(
    form: PlusSpaceForm, D: int, config: SearchConfig, T: Optional[int] = None
) -> ExactSeries:
    """
    L_D (or its modification for p = 2, 3) modulo p^e with exponents <= T.

    Args:
        form: f_d for config.d
        D: Discriminant of config.S
        config: Search configuration
        T: Number of coefficients (default config.terms)

    Returns:
        ExactSeries: Over Residues(p, e)
    """
    T = config.terms if T is None else T
    if config.mode == "lhat":
        context = LhatContext(config.h_S, config.index)
        return lhat(form, D, config.p, config.j, context, T)
    return log_deriv(form, D, T).reduce(config.p, config.j)


def column_vector(
    form: PlusSpaceForm, D: int, config: SearchConfig, T: Optional[int] = None
) -> List[int]:
    """Coefficients q^1..q^T of column_series as residues."""
    T = config.terms if T is None else T
    return column_series(form, D, config, T).coefficients(1, T + 1)
