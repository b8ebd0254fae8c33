"""
Command-line interface module for the borcherds tool.

This package contains modules for parsing command-line arguments,
managing configuration, running the subcommands and rendering results.
"""

from .argument_parser import create_parser, parse_args
from .commands import COMMANDS, run_command
from .config import Configuration, load_config, save_config
from .output import CommandResult, render

__all__ = [
    "create_parser",
    "parse_args",
    "COMMANDS",
    "run_command",
    "Configuration",
    "load_config",
    "save_config",
    "CommandResult",
    "render",
]
