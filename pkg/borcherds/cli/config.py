#!/usr/bin/env python3
"""
Configuration management module.

This module provides functionality for loading and saving configuration
files, and for merging them with command-line options.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Optional

from ..errors import PreconditionError
from ..modforms import default_cache_dir
from ..modforms.heegner import DEFAULT_MAX_DIGITS, DEFAULT_MAX_J_TERMS

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "text")


@dataclass
class Configuration:
    """
    Settings shared by every command.

    This dataclass holds the options that are not specific to one
    subcommand, allowing for easy serialization and deserialization.
    """

    # Cache
    cache_dir: Optional[str] = None
    use_cache: bool = True

    # Execution
    workers: int = 1
    log_level: str = "WARNING"
    digits: Optional[int] = None
    max_digits: int = DEFAULT_MAX_DIGITS
    max_j_terms: int = DEFAULT_MAX_J_TERMS

    # Output
    output_format: str = "json"
    show_timing: bool = False

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.cache_dir is None:
            self.cache_dir = default_cache_dir()
        self.cache_dir = os.path.expanduser(self.cache_dir)

        if self.output_format not in OUTPUT_FORMATS:
            raise PreconditionError(f"unknown output format {self.output_format!r}")

        self.log_level = str(self.log_level).upper()
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise PreconditionError(f"unknown log level {self.log_level!r}")

        if self.workers < 1:
            logger.warning("workers (%d) is below 1. Setting workers to 1.", self.workers)
            self.workers = 1

        if self.digits is not None and self.digits > self.max_digits:
            logger.warning(
                "digits (%d) exceeds max_digits (%d). Setting max_digits to %d.",
                self.digits,
                self.max_digits,
                self.digits,
            )
            self.max_digits = self.digits

    @classmethod
    def from_args(cls, args) -> "Configuration":
        """
        Create a Configuration instance from parsed command-line arguments.

        Options that were not given keep their dataclass defaults.

        Args:
            args: Parsed command-line arguments

        Returns:
            Configuration: Configuration instance
        """
        return _override_config_from_args(cls(), args)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert configuration to a dictionary.

        Returns:
            dict: Dictionary representation of the configuration
        """
        return asdict(self)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> "Configuration":
        """
        Create a Configuration instance from a dictionary.

        Unknown keys are ignored with a warning.

        Args:
            config_dict: Dictionary containing configuration parameters

        Returns:
            Configuration: Configuration instance
        """
        known = {f.name for f in fields(cls)}
        for key in sorted(set(config_dict) - known):
            logger.warning("ignoring unknown configuration key %r", key)
        return cls(**{k: v for k, v in config_dict.items() if k in known})


def load_config(config_file: str) -> Configuration:
    """
    Load configuration from a JSON file.

    Args:
        config_file: Path to the configuration file

    Returns:
        Configuration: Configuration instance

    Raises:
        FileNotFoundError: If the configuration file does not exist
        PreconditionError: If the file is not a valid configuration
    """
    if not os.path.exists(config_file):
        raise FileNotFoundError(f"Configuration file not found: {config_file}")

    try:
        with open(config_file, "r") as f:
            config_dict = json.load(f)
    except json.JSONDecodeError as e:
        raise PreconditionError(f"Invalid JSON in configuration file: {e.msg}") from e

    if not isinstance(config_dict, dict):
        raise PreconditionError(f"Configuration file {config_file} does not hold an object")
    return Configuration.from_dict(config_dict)


def save_config(config: Configuration, config_file: str) -> None:
    """
    Save configuration to a JSON file.

    Args:
        config: Configuration instance
        config_file: Path to the configuration file

    Raises:
        IOError: If the configuration file cannot be written
    """
    try:
        config_dict = config.to_dict()

        directory = os.path.dirname(os.path.abspath(config_file))
        if directory and not os.path.exists(directory):
            os.makedirs(directory)

        with open(config_file, "w") as f:
            json.dump(config_dict, f, indent=2, sort_keys=True)

        logger.info("Configuration saved to %s", config_file)

    except IOError as e:
        raise IOError(f"Error saving configuration: {e}")


def load_config_from_args(args) -> Configuration:
    """
    Load configuration from command-line arguments or a config file.

    Explicit command-line options override values from the file.

    Args:
        args: Parsed command-line arguments

    Returns:
        Configuration: Configuration instance
    """
    if getattr(args, "config", None):
        try:
            config = load_config(args.config)
            logger.info("Loaded configuration from %s", args.config)
            return _override_config_from_args(config, args)
        except (OSError, PreconditionError, TypeError) as e:
            logger.warning("Error loading configuration file: %s", e)
            logger.warning("Falling back to command-line arguments")

    return Configuration.from_args(args)


def _override_config_from_args(config: Configuration, args) -> Configuration:
    """
    Override configuration with explicitly specified command-line arguments.

    Args:
        config: Existing configuration
        args: Parsed command-line arguments

    Returns:
        Configuration: Updated configuration
    """
    arg_dict = vars(args)
    for key, value in arg_dict.items():
        if value is None:
            continue
        if key == "no_cache":
            config.use_cache = not value
        elif key in ("cache_dir", "workers", "log_level", "digits", "max_digits",
                     "max_j_terms", "output_format", "show_timing"):
            setattr(config, key, value)

    # Re-run validation on the merged values
    config.__post_init__()
    return config
