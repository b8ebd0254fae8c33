#!/usr/bin/env python3
"""
Main entry point for the borcherds tool.

This module provides the main entry point for running the pipeline
from the command line.
"""

import logging
import sys
from multiprocessing import freeze_support
from typing import List, Optional

from .cli.argument_parser import log_run_summary, parse_args
from .cli.commands import run_command
from .cli.config import load_config_from_args, save_config
from .cli.output import CommandResult, emit
from .errors import EXIT_FAILURE, EXIT_INTERRUPTED, BorcherdsError

logger = logging.getLogger("borcherds")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    # Support for freezing with PyInstaller
    freeze_support()

    args = parse_args(argv)
    output_format, show_timing = "json", False
    try:
        config = load_config_from_args(args)
        output_format, show_timing = config.output_format, config.show_timing
        logging.basicConfig(
            level=getattr(logging, config.log_level),
            format=LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )

        if args.save_config:
            save_config(config, args.save_config)

        log_run_summary(args, config)
        result = run_command(args, config)
        emit(result, sys.stdout, output_format, show_timing)
        return result.exit_code

    except KeyboardInterrupt:
        logger.warning("Interrupted by user.")
        return EXIT_INTERRUPTED

    except BorcherdsError as e:
        logger.error("%s: %s", type(e).__name__, e)
        result = CommandResult(
            args.command,
            {"error": str(e), "type": type(e).__name__},
            status="error",
            exit_code=e.exit_code,
        )
        emit(result, sys.stdout, output_format, show_timing)
        return e.exit_code

    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
