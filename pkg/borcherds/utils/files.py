#!/usr/bin/env python3
"""
JSON file helpers shared by the coefficient cache and certificate storage.
"""

import json
import logging
import os
from typing import Any, Optional

from ..errors import CacheError

logger = logging.getLogger(__name__)


def atomic_write_json(path: str, data: Any) -> None:
    """
    Write data as JSON to path without ever leaving a half-written file.

    The document goes to a temporary sibling first, is flushed to disk and
    then renamed over the target.

    Raises:
        CacheError: If neither the atomic nor the direct write succeeds
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    tmp_file = f"{path}.tmp"
    try:
        with open(tmp_file, "w") as f:
            json.dump(data, f, sort_keys=True)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_file, path)
    except OSError as e:
        logger.warning("atomic write of %s failed (%s); writing directly", path, e)
        try:
            with open(path, "w") as f:
                json.dump(data, f, sort_keys=True)
        except OSError as e2:
            raise CacheError(f"cannot write {path}: {e2}") from e2


def read_json(path: str) -> Optional[Any]:
    """Load a JSON document; None if the file is missing or not valid JSON."""
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError:
        logger.warning("ignoring %s: invalid JSON", path)
        return None
    except OSError as e:
        logger.warning("ignoring %s: %s", path, e)
        return None
