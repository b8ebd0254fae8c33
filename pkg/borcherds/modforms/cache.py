#!/usr/bin/env python3
"""
On-disk cache of plus-space coefficient tables.

One JSON record per index d holds the coefficients of f_d from q^-d up to
its precision together with a SHA-256 digest. Records with another format
version, a digest mismatch or missing fields are ignored and rebuilt.
"""

import hashlib
import json
import logging
import os
import threading
from typing import Any, Dict, List, Optional

from ..qseries import ZZ, ExactSeries
from ..utils.files import atomic_write_json, read_json
from .plus_space import PlusSpaceForm

logger = logging.getLogger(__name__)

CACHE_FORMAT = 1

REQUIRED_FIELDS = ("version", "d", "precision", "valuation", "coefficients", "sha256")


def default_cache_dir() -> str:
    """
    Resolve the cache directory: $BORCHERDS_CACHE_DIR, then
    $XDG_DATA_HOME/borcherds, then ~/.local/share/borcherds.
    """
    explicit = os.environ.get("BORCHERDS_CACHE_DIR")
    if explicit:
        return explicit
    data_home = os.environ.get("XDG_DATA_HOME") or os.path.join(
        os.path.expanduser("~"), ".local", "share"
    )
    return os.path.join(data_home, "borcherds")


def _digest(coefficients: List[int]) -> str:
    payload = json.dumps(coefficients, separators=(",", ":")).encode("ascii")
    return hashlib.sha256(payload).hexdigest()


class CoefficientCache:
    """
    Reads and writes f_d coefficient tables under one directory.

    Loads may run concurrently; saves are serialised by a lock.
    """

    def __init__(self, directory: Optional[str] = None):
        """
        Initialize the cache.

        Args:
            directory: Cache directory (default: default_cache_dir())
        """
        self.directory = directory or default_cache_dir()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def path_for(self, d: int) -> str:
        return os.path.join(self.directory, f"f_{d}.json")

    def _record(self, form: PlusSpaceForm) -> Dict[str, Any]:
        coefficients = list(form.series.coefficients(-form.d, form.precision + 1))
        return {
            "version": CACHE_FORMAT,
            "d": form.d,
            "precision": form.precision,
            "valuation": -form.d,
            "coefficients": coefficients,
            "sha256": _digest(coefficients),
        }

    def cached_precision(self, d: int) -> Optional[int]:
        """Precision of the valid record for d, or None."""
        form = self.load(d)
        return None if form is None else form.precision

    def save(self, form: PlusSpaceForm) -> bool:
        """
        Store a form unless an equally precise record already exists.

        Returns:
            bool: True if a record was written

        Raises:
            CacheError: If the record cannot be written
        """
        with self._lock:
            existing = self._load_record(form.d)
            if existing is not None and existing["precision"] >= form.precision:
                return False
            atomic_write_json(self.path_for(form.d), self._record(form))
        logger.debug("cached f_%d to q^%d", form.d, form.precision)
        return True

    def _load_record(self, d: int) -> Optional[Dict[str, Any]]:
        path = self.path_for(d)
        record = read_json(path)
        if record is None:
            return None
        if not isinstance(record, dict) or any(k not in record for k in REQUIRED_FIELDS):
            logger.warning("ignoring cache record %s: missing fields", path)
            return None
        if record["version"] != CACHE_FORMAT:
            logger.warning(
                "ignoring cache record %s: format %s, expected %s",
                path, record["version"], CACHE_FORMAT,
            )
            return None
        if record["d"] != d or record["valuation"] != -d:
            logger.warning("ignoring cache record %s: wrong index", path)
            return None
        coefficients = record["coefficients"]
        if (
            not isinstance(coefficients, list)
            or len(coefficients) != record["precision"] + d + 1
            or _digest(coefficients) != record["sha256"]
        ):
            logger.warning("ignoring cache record %s: checksum mismatch", path)
            return None
        return record

    def load(self, d: int, min_precision: Optional[int] = None) -> Optional[PlusSpaceForm]:
        """
        Load f_d if a valid record with enough precision exists.

        Args:
            d: Plus-space index
            min_precision: Smallest acceptable precision (default: any)

        Returns:
            PlusSpaceForm or None
        """
        record = self._load_record(d)
        if record is None or (min_precision is not None and record["precision"] < min_precision):
            self.misses += 1
            return None
        self.hits += 1
        series = ExactSeries.make(
            ZZ, record["coefficients"], record["valuation"], record["precision"] + 1
        )
        return PlusSpaceForm(d, series)

    def clear(self) -> int:
        """Delete every cache record; return the number removed."""
        removed = 0
        if not os.path.isdir(self.directory):
            return 0
        for name in os.listdir(self.directory):
            if name.startswith("f_") and name.endswith(".json"):
                os.remove(os.path.join(self.directory, name))
                removed += 1
        return removed
