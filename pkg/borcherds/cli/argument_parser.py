#!/usr/bin/env python3
"""
Command-line argument parsing module.

This module provides functions for setting up and parsing the command-line
arguments of the borcherds tool: global options shared by every command
and one subcommand per pipeline stage.
"""

import argparse
import logging
from typing import List, Optional, Tuple

logger = logging.getLogger(__name__)

IDENTITIES = ("j-product", "zagier-twist", "eisenstein", "delta-product")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _int_list(text: str) -> List[int]:
    """Parse '5,20,37' into [5, 20, 37]."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> Tuple[int, int]:
    """Parse 'LOWER:UPPER' (or just 'UPPER') into an inclusive range."""
    try:
        if ":" in text:
            lower, upper = text.split(":", 1)
            return int(lower), int(upper)
        return 2, int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LOWER:UPPER, got {text!r}")


def _add_global_options(parser: argparse.ArgumentParser) -> None:
    # None means "not given"; Configuration supplies the defaults.
    cache_group = parser.add_argument_group("Cache Options")
    cache_group.add_argument(
        "--cache-dir",
        type=str,
        default=None,
        help="Directory of the coefficient cache (default: $BORCHERDS_CACHE_DIR, "
        "$XDG_DATA_HOME/borcherds or ~/.local/share/borcherds)",
    )
    cache_group.add_argument(
        "--no-cache",
        action="store_true",
        default=None,
        help="Neither read nor write the coefficient cache",
    )

    run_group = parser.add_argument_group("Execution Options")
    run_group.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Number of processes for column assembly (default: 1)",
    )
    run_group.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Logging threshold on stderr (default: WARNING)",
    )
    run_group.add_argument(
        "--digits",
        type=int,
        default=None,
        help="Starting decimal precision for numerical evaluations (default: automatic)",
    )
    run_group.add_argument(
        "--max-digits",
        type=int,
        default=None,
        help="Precision ceiling for the doubling retries (default: 4000)",
    )
    run_group.add_argument(
        "--max-j-terms",
        type=int,
        default=None,
        help="Maximal number of q-expansion terms of j used numerically (default: 5000)",
    )

    output_group = parser.add_argument_group("Output Options")
    output_group.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "text"],
        default=None,
        help="Result format on stdout (default: json)",
    )
    output_group.add_argument(
        "--timing",
        dest="show_timing",
        action="store_true",
        default=None,
        help="Include the elapsed time in the result",
    )

    config_group = parser.add_argument_group("Configuration Options")
    config_group.add_argument(
        "--config", type=str, default=None, help="Path to configuration file (JSON)"
    )
    config_group.add_argument(
        "--save-config",
        type=str,
        default=None,
        help="Save current global settings to configuration file",
    )


def create_parser() -> argparse.ArgumentParser:
    """
    Create the command-line argument parser.

    Returns:
        argparse.ArgumentParser: Configured argument parser
    """
    parser = argparse.ArgumentParser(
        prog="borcherds",
        description="Exact q-series of weight 1/2 plus-space forms, twisted Borcherds "
        "products and congruences between their logarithmic derivatives",
    )
    _add_global_options(parser)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    fd = commands.add_parser("fd", help="Coefficients A(n, d) of the plus-space form f_d")
    fd.add_argument("--d", type=int, required=True, help="Index d (d = 0, 3 mod 4)")
    fd.add_argument(
        "--precision", type=int, default=100, help="Largest exponent to emit (default: 100)"
    )

    logderiv = commands.add_parser(
        "logderiv", help="Logarithmic derivative L_D of the product twisted by D"
    )
    logderiv.add_argument("--d", type=int, required=True, help="Index d of f_d")
    logderiv.add_argument("--D", dest="D", type=int, required=True, help="Twist discriminant D > 1")
    logderiv.add_argument(
        "--terms", type=int, default=10, help="Number of coefficients q^1..q^terms (default: 10)"
    )
    logderiv.add_argument("--mod", dest="p", type=int, default=None, help="Also reduce modulo p^j")
    logderiv.add_argument("--j", type=int, default=1, help="Exponent of the modulus (default: 1)")
    logderiv.add_argument(
        "--check",
        action="store_true",
        help="Recompute L_D from the twisted product and compare",
    )

    search = commands.add_parser("search", help="Search congruences among L_D modulo p^j")
    search.add_argument("--d", type=int, required=True, help="Index d of f_d")
    search.add_argument("--p", type=int, required=True, help="Prime p")
    search.add_argument("--j", type=int, default=1, help="Exponent of the modulus (default: 1)")
    search.add_argument("--N", dest="N", type=int, default=1, help="Level (default: 1)")
    selection = search.add_mutually_exclusive_group(required=True)
    selection.add_argument("--S", dest="S", type=_int_list, help="Comma-separated discriminants")
    selection.add_argument(
        "--D-range",
        dest="D_range",
        type=_int_range,
        help="Take every admissible D in LOWER:UPPER",
    )
    selection.add_argument(
        "--auto",
        action="store_true",
        help="Take admissible D in increasing order until #S exceeds the threshold",
    )
    search.add_argument(
        "--terms", type=int, default=None, help="Coefficients compared (default: ceiling of threshold)"
    )
    search.add_argument(
        "--mode",
        choices=["logderiv", "lhat"],
        default=None,
        help="Series compared (default: lhat for p = 2, 3, logderiv otherwise)",
    )
    search.add_argument(
        "--allow-ramified",
        action="store_true",
        help="Admit D with p ramified in Q(sqrt(-dD)) in --D-range",
    )
    search.add_argument(
        "--fundamental-only",
        action="store_true",
        help="Admit only fundamental D in --D-range and --auto",
    )
    search.add_argument("--save", type=str, default=None, help="Write the certificates to this file")

    verify = commands.add_parser("verify", help="Re-check saved certificates to a new truncation")
    verify.add_argument("certificate", type=str, help="Certificate file written by search --save")
    verify.add_argument(
        "--terms", type=int, default=None, help="Coefficients checked (default: verified_to)"
    )
    verify.add_argument(
        "--residual",
        action="store_true",
        help="Also report the combination series, nonzero terms included",
    )
    verify.add_argument(
        "--update", action="store_true", help="Write the raised verified_to back to the file"
    )

    identity = commands.add_parser("identity-check", help="Check a known q-series identity")
    identity.add_argument("which", choices=IDENTITIES, help="Identity to check")
    identity.add_argument("--terms", type=int, default=30, help="Truncation (default: 30)")

    hilbert = commands.add_parser("hilbert", help="Hilbert class polynomial of a discriminant")
    hilbert.add_argument("--disc", type=int, required=True, help="Negative discriminant")

    return parser


def parse_args(args: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        args: Command-line arguments to parse (uses sys.argv if None)

    Returns:
        argparse.Namespace: Parsed arguments

    Raises:
        SystemExit: If required arguments are missing or invalid
    """
    parser = create_parser()
    parsed_args = parser.parse_args(args)

    if parsed_args.command == "search" and parsed_args.S is not None and not parsed_args.S:
        parser.error("--S needs at least one discriminant")
    if parsed_args.command == "search" and parsed_args.D_range is not None:
        lower, upper = parsed_args.D_range
        if lower > upper:
            parser.error(f"empty discriminant range {lower}:{upper}")
    for name in ("terms", "precision"):
        value = getattr(parsed_args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name} must not be negative")
    if parsed_args.workers is not None and parsed_args.workers < 1:
        parser.error("--workers must be at least 1")

    return parsed_args


def log_run_summary(args: argparse.Namespace, config) -> None:
    """
    Log a summary of the command and configuration at INFO.

    Args:
        args: Parsed arguments
        config: Effective Configuration
    """
    logger.info("Running borcherds %s", args.command)
    logger.info("- Cache: %s", config.cache_dir if config.use_cache else "disabled")
    logger.info("- Workers: %d", config.workers)
    logger.info("- Digits: %s (max %d)", config.digits or "automatic", config.max_digits)
    logger.info("- Output: %s%s", config.output_format, " with timing" if config.show_timing else "")
    if args.command == "search":
        if args.S is not None:
            logger.info("- Discriminants: %s", ", ".join(str(D) for D in args.S))
        elif args.D_range is not None:
            logger.info("- Discriminant range: %d..%d", *args.D_range)
        else:
            logger.info("- Discriminants: chosen automatically")
