#!/usr/bin/env python3
"""
Search for linear congruences between logarithmic derivatives.

The first n coefficients of every L_D, D in S, reduced modulo p^e, form the
columns of an n x #S matrix. Kernel vectors with a unit entry are
congruences; once n reaches the Sturm bound of the weight in question they
hold for every coefficient.
"""

import logging
from typing import List, Optional

from ..errors import ConsistencyError, PreconditionError
from ..modforms import CoefficientCache, PlusSpaceForm, plus_space_form
from ..qseries import ExactSeries, Residues, add, scale, zero
from .certificate import CongruenceCertificate, SearchConfig, canonicalise
from .columns import column_series
from .linalg import has_unit_entry, kernel_mod_prime_power, mat_vec_mod, transpose

logger = logging.getLogger(__name__)


def _form_for(
    config: SearchConfig,
    precision: int,
    form: Optional[PlusSpaceForm],
    cache: Optional[CoefficientCache],
) -> PlusSpaceForm:
    if form is None:
        return plus_space_form(config.d, precision, cache=cache)
    if form.d != config.d:
        raise PreconditionError(f"form f_{form.d} given for a search over f_{config.d}")
    form.require_precision(precision)
    return form


def find_congruences(
    config: SearchConfig,
    form: Optional[PlusSpaceForm] = None,
    cache: Optional[CoefficientCache] = None,
    workers: int = 1,
) -> List[CongruenceCertificate]:
    """
    Find the congruences among the series of config.S on config.terms coefficients.

    Args:
        config: Search configuration
        form: f_d known to max(S) * terms^2 (built or loaded when omitted)
        cache: Coefficient cache used when the form has to be obtained
        workers: Number of processes for the column assembly

    Returns:
        list: One canonical certificate per kernel generator with a unit entry

    Raises:
        PrecisionError: If the given form is not known far enough
    """
    from ..workers.manager import ColumnPool

    T = config.terms
    if not config.threshold_met:
        logger.warning(
            "#S = %d does not meet the threshold %s (%s); relations found are not guaranteed",
            len(config.S),
            config.threshold,
            "strict" if config.strict else "non-strict",
        )
    if config.n_terms is not None and config.n_terms < config.threshold:
        logger.warning("n_terms = %d is below the threshold %s", config.n_terms, config.threshold)
    precision = config.required_precision(T)
    form = _form_for(config, precision, form, cache)

    with ColumnPool(form, config, workers, T) as pool:
        columns = pool.map(config.S)
    nontrivial = tuple(any(column) for column in columns)
    for D, flag in zip(config.S, nontrivial):
        if not flag:
            logger.info("L_%d vanishes modulo %d on %d terms", D, config.modulus, T)

    matrix = transpose(columns, T)
    kernel = kernel_mod_prime_power(matrix, config.p, config.modulus_exponent, len(config.S))
    certificates: List[CongruenceCertificate] = []
    seen = set()
    for vector in kernel:
        if not has_unit_entry(vector, config.p):
            continue
        coeffs = canonicalise(vector, config.p, config.modulus)
        if coeffs in seen:
            continue
        if any(mat_vec_mod(matrix, coeffs, config.modulus)):
            raise ConsistencyError(f"kernel vector {coeffs} does not annihilate the matrix")
        seen.add(coeffs)
        certificates.append(
            CongruenceCertificate(
                config=config,
                coeffs=coeffs,
                verified_to=T,
                nontrivial=nontrivial,
                form_precision=form.precision,
            )
        )
    logger.info(
        "found %d congruences modulo %d among %d series", len(certificates), config.modulus, len(config.S)
    )
    return certificates


def combination_series(
    cert: CongruenceCertificate,
    T: int,
    form: Optional[PlusSpaceForm] = None,
    cache: Optional[CoefficientCache] = None,
) -> ExactSeries:
    """
    sum_D c_D L_D modulo p^e with exponents <= T.

    Only the discriminants with nonzero coefficient are expanded, so f_d is
    needed to max(support) * T^2.
    """
    config = cert.config
    ring = Residues(config.p, config.modulus_exponent)
    support = cert.support
    total = zero(ring, T + 1)
    if not support:
        return total
    precision = config.required_precision(T, [D for D, _ in support])
    form = _form_for(config, precision, form, cache)
    for D, c in support:
        total = add(total, scale(column_series(form, D, config, T), c))
    return total


def verify_congruence(
    cert: CongruenceCertificate,
    T: int,
    form: Optional[PlusSpaceForm] = None,
    cache: Optional[CoefficientCache] = None,
) -> bool:
    """
    Check that the relation of cert vanishes on q^1..q^T.

    On success verified_to is raised to T (never lowered).

    Raises:
        PrecisionError: If f_d is not known to max(support) * T^2
    """
    if T < 1:
        raise PreconditionError(f"need at least one coefficient, got T = {T}")
    series = combination_series(cert, T, form, cache)
    failing = next((n for n, c in series.items() if c and 1 <= n <= T), None)
    if failing is not None:
        logger.info("%s fails at q^%d", cert, failing)
        return False
    cert.verified_to = max(cert.verified_to, T)
    return True
