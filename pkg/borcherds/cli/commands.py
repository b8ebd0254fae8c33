#!/usr/bin/env python3
"""
Implementations of the borcherds subcommands.

Each cmd_* function takes the parsed arguments, the effective
Configuration and the coefficient cache (or None) and returns a
CommandResult whose payload is exact.
"""

import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from ..congruence import (
    SearchConfig,
    admissible_discriminants,
    choose_discriminant_set,
    combination_series,
    find_congruences,
    load_certificates,
    save_certificate,
    save_certificates,
    verify_congruence,
)
from ..errors import (
    EXIT_IDENTITY,
    EXIT_NO_CONGRUENCE,
    EXIT_THRESHOLD_UNMET,
    PreconditionError,
)
from ..modforms import (
    CoefficientCache,
    PlusSpaceForm,
    delta,
    eisenstein_congruence_report,
    hilbert_class_polynomial,
    is_plus_space_index,
    j_invariant,
    plus_space_form,
)
from ..products import (
    log_deriv,
    log_deriv_via_product,
    recognise_twisted_class_polynomial,
    twisted_product_psi,
    untwisted_product,
)
from ..qseries import ExactSeries, render_series, truncate
from ..quadforms import is_discriminant, validate_twist
from ..utils.files import read_json
from .output import CommandResult

logger = logging.getLogger(__name__)

Command = Callable[..., CommandResult]


def _pairs(series: ExactSeries, stop: int) -> List[Tuple[int, int]]:
    """Nonzero (exponent, coefficient) pairs with exponent <= stop."""
    return [(n, c) for n, c in series.items() if n <= stop]


def _first_mismatch(a: ExactSeries, b: ExactSeries, start: int, stop: int) -> Optional[int]:
    for n in range(start, stop + 1):
        if a.coefficient(n) != b.coefficient(n):
            return n
    return None


def _identity_result(name: str, terms: int, mismatch: Optional[int], extra: Optional[Dict] = None) -> CommandResult:
    payload = {"identity": name, "terms": terms, "success": mismatch is None, "first_mismatch": mismatch}
    payload.update(extra or {})
    if mismatch is None:
        return CommandResult("identity-check", payload)
    logger.error("%s identity fails at q^%d", name, mismatch)
    return CommandResult("identity-check", payload, status="error", exit_code=EXIT_IDENTITY)


def cmd_fd(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """Coefficients A(n, d) of f_d up to --precision."""
    if not is_plus_space_index(args.d):
        raise PreconditionError(f"d = {args.d} is not a plus-space index (d = 0, 3 mod 4)")
    form = plus_space_form(args.d, args.precision, cache=cache)
    return CommandResult(
        "fd",
        {
            "d": args.d,
            "precision": form.precision,
            "coefficients": _pairs(form.series, form.precision),
            "series": render_series(form.series),
        },
    )


def cmd_logderiv(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """L_D for f_d, optionally reduced modulo p^j and cross-checked."""
    d, D, terms = args.d, args.D, args.terms
    if not is_plus_space_index(d):
        raise PreconditionError(f"d = {d} is not a plus-space index (d = 0, 3 mod 4)")
    validate_twist(D, d)
    payload = {"d": d, "D": D, "terms": terms}
    if terms == 0:
        payload.update({"series": "0", "coefficients": []})
        if args.p:
            payload.update({"modulus": args.p ** args.j, "reduced_series": "0", "reduced_coefficients": []})
        return CommandResult("logderiv", payload)

    form = plus_space_form(d, D * terms * terms, cache=cache)
    series = log_deriv(form, D, terms)
    payload["series"] = render_series(series.series)
    payload["coefficients"] = series.series.coefficients(1, terms + 1)
    if args.p:
        reduced = series.reduce(args.p, args.j)
        payload["modulus"] = args.p ** args.j
        payload["reduced_series"] = render_series(reduced)
        payload["reduced_coefficients"] = reduced.coefficients(1, terms + 1)
    if args.check:
        log_deriv_via_product(form, D, terms)
        payload["checked_against_product"] = True
    return CommandResult("logderiv", payload)


def _discriminant_set(args) -> List[int]:
    if args.S is not None:
        return list(args.S)
    if args.D_range is not None:
        lower, upper = args.D_range
        return admissible_discriminants(
            args.d,
            args.p,
            upper,
            args.N,
            lower=lower,
            allow_ramified=args.allow_ramified,
            fundamental_only=args.fundamental_only,
        )
    return list(
        choose_discriminant_set(
            args.d, args.p, args.j, args.N, fundamental_only=args.fundamental_only
        )
    )


def cmd_search(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """Congruences among the series of a discriminant set."""
    S = _discriminant_set(args)
    if not S:
        raise PreconditionError("no admissible discriminant was selected")
    search_config = SearchConfig(
        d=args.d, p=args.p, j=args.j, S=tuple(S), N=args.N, n_terms=args.terms, mode=args.mode
    )
    certificates = find_congruences(search_config, cache=cache, workers=config.workers)
    if args.save:
        save_certificates(certificates, args.save)

    payload = {
        "config": search_config.to_dict(),
        "h_S": search_config.h_S,
        "modulus": search_config.modulus,
        "threshold": search_config.threshold,
        "strict": search_config.strict,
        "threshold_met": search_config.threshold_met,
        "certificates": [
            {
                "relation": cert.render(),
                "coefficients": list(cert.coeffs),
                "verified_to": cert.verified_to,
            }
            for cert in certificates
        ],
    }
    if certificates:
        payload["nontrivial"] = [[D, flag] for D, flag in zip(search_config.S, certificates[0].nontrivial)]

    if not certificates:
        return CommandResult("search", payload, exit_code=EXIT_NO_CONGRUENCE)
    if not search_config.threshold_met:
        return CommandResult("search", payload, exit_code=EXIT_THRESHOLD_UNMET)
    return CommandResult("search", payload)


def cmd_verify(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """Re-check saved certificates to --terms coefficients."""
    certificates = load_certificates(args.certificate)
    targets = [args.terms or cert.verified_to for cert in certificates]

    # one f_d per index, at the largest precision any certificate needs
    needed: Dict[int, int] = {}
    for cert, T in zip(certificates, targets):
        support = [D for D, _ in cert.support] or list(cert.config.S)
        precision = cert.config.required_precision(T, support)
        needed[cert.config.d] = max(needed.get(cert.config.d, 0), precision)
    forms: Dict[int, PlusSpaceForm] = {
        d: plus_space_form(d, precision, cache=cache) for d, precision in sorted(needed.items())
    }

    results = []
    for cert, T in zip(certificates, targets):
        form = forms[cert.config.d]
        ok = verify_congruence(cert, T, form=form)
        entry = {"relation": cert.render(), "verified": ok, "terms": T, "verified_to": cert.verified_to}
        if args.residual:
            entry["combination"] = render_series(combination_series(cert, T, form=form))
        results.append(entry)

    all_ok = all(entry["verified"] for entry in results)
    if args.update and all_ok:
        # keep the layout the file was written with
        stored = read_json(args.certificate)
        if isinstance(stored, dict) and "certificates" in stored:
            save_certificates(certificates, args.certificate)
        else:
            save_certificate(certificates[0], args.certificate)
    payload = {"certificate_file": args.certificate, "results": results}
    if all_ok:
        return CommandResult("verify", payload)
    return CommandResult("verify", payload, status="error", exit_code=EXIT_IDENTITY)


def _check_j_product(terms: int, cache: Optional[CoefficientCache]) -> CommandResult:
    # the tail of q^-1 * prod reaches q^(terms + 1)
    form = plus_space_form(3, (terms + 1) ** 2, cache=cache)
    exponents = {n: 3 * form.coefficient(n * n) for n in range(1, terms + 2)}
    product = untwisted_product(exponents, -1, terms + 1).to_series()
    return _identity_result("j-product", terms, _first_mismatch(product, j_invariant(terms + 1), -1, terms))


def _check_delta_product(terms: int, cache: Optional[CoefficientCache]) -> CommandResult:
    form = plus_space_form(0, terms * terms, cache=cache)
    exponents = {n: 12 * form.coefficient(n * n) for n in range(1, terms + 1)}
    product = untwisted_product(exponents, 1, terms + 1).to_series()
    return _identity_result("delta-product", terms, _first_mismatch(product, delta(terms + 1), 0, terms))


def _check_zagier_twist(terms: int, config, cache: Optional[CoefficientCache]) -> CommandResult:
    D = 8
    form = plus_space_form(3, D * terms * terms, cache=cache)
    psi = twisted_product_psi(form, D, terms, sign=1)
    recognised = recognise_twisted_class_polynomial(
        D, 3, terms, digits=config.digits, max_digits=config.max_digits
    )
    expected = recognised.series
    mismatch = _first_mismatch(psi, expected, min(psi.valuation, expected.valuation, 0), terms)
    return _identity_result(
        "zagier-twist",
        terms,
        mismatch,
        {
            "D": D,
            "d": 3,
            "series": render_series(_head(psi, terms)),
            "recognition_residual": recognised.residual,
            "digits": recognised.digits,
        },
    )


def _head(series: ExactSeries, terms: int, limit: int = 6) -> ExactSeries:
    return truncate(series, min(series.trunc, series.valuation + min(terms + 1, limit)))


def _check_eisenstein(terms: int) -> CommandResult:
    trunc = terms + 1
    mod24 = eisenstein_congruence_report(range(4, 21, 2), 24, trunc)
    primes = {}
    for p in (5, 7, 11, 13):
        primes[p] = eisenstein_congruence_report([p - 1], p, trunc)[p - 1]
    failures = [n for n in list(mod24.values()) + list(primes.values()) if n is not None]
    payload = {
        "modulus_24": [[k, n] for k, n in sorted(mod24.items())],
        "weight_p_minus_1": [[p, n] for p, n in sorted(primes.items())],
    }
    return _identity_result("eisenstein", terms, min(failures) if failures else None, payload)


def cmd_identity_check(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """Check one of the known identities to --terms."""
    terms = args.terms
    if terms < 1:
        raise PreconditionError("identity checks need --terms >= 1")
    if args.which == "j-product":
        return _check_j_product(terms, cache)
    if args.which == "delta-product":
        return _check_delta_product(terms, cache)
    if args.which == "zagier-twist":
        return _check_zagier_twist(terms, config, cache)
    return _check_eisenstein(terms)


def cmd_hilbert(args, config, cache: Optional[CoefficientCache]) -> CommandResult:
    """Hilbert class polynomial of --disc with its rounding diagnostics."""
    disc = args.disc
    if disc >= 0 or not is_discriminant(disc):
        raise PreconditionError(f"{disc} is not a negative discriminant")
    polynomial = hilbert_class_polynomial(
        disc, digits=config.digits, max_digits=config.max_digits, max_j_terms=config.max_j_terms
    )
    return CommandResult(
        "hilbert",
        {
            "disc": disc,
            "polynomial": polynomial.render(root=False),
            "hilbert_class_polynomial": polynomial.render(),
            "coefficients": list(polynomial.coefficients),
            "degree": polynomial.degree,
            "omega_denominator": polynomial.omega_denominator,
            "digits": polynomial.digits,
            "residual": polynomial.residual,
        },
    )


COMMANDS: Dict[str, Command] = {
    "fd": cmd_fd,
    "logderiv": cmd_logderiv,
    "search": cmd_search,
    "verify": cmd_verify,
    "identity-check": cmd_identity_check,
    "hilbert": cmd_hilbert,
}


def run_command(args, config) -> CommandResult:
    """
    Dispatch to the subcommand and time it.

    Args:
        args: Parsed arguments
        config: Effective Configuration

    Returns:
        CommandResult: Result with timing_ms filled in
    """
    cache = CoefficientCache(config.cache_dir) if config.use_cache else None
    started = time.perf_counter()
    result = COMMANDS[args.command](args, config, cache)
    result.timing_ms = (time.perf_counter() - started) * 1000
    if cache is not None:
        logger.info("cache hits: %d, misses: %d", cache.hits, cache.misses)
    return result
