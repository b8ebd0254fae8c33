#!/usr/bin/env python3
"""
Worker pool that assembles congruence-matrix columns in parallel.

This module contains the ColumnPool class. Every column depends only on the
shared f_d table and one discriminant, so columns are computed
independently; the table is installed once per worker process.
"""

import logging
import multiprocessing
import time
from typing import Any, Dict, List, Optional, Sequence

from ..congruence.certificate import SearchConfig
from ..congruence.columns import column_vector
from ..modforms import PlusSpaceForm

logger = logging.getLogger(__name__)

_shared: Dict[str, Any] = {}


def _install(form: PlusSpaceForm, config: SearchConfig, terms: int) -> None:
    """Pool initializer: keep the read-only inputs in the worker process."""
    _shared["form"] = form
    _shared["config"] = config
    _shared["terms"] = terms


def _column(D: int) -> List[int]:
    return column_vector(_shared["form"], D, _shared["config"], _shared["terms"])


class ColumnPool:
    """
    Computes the columns of a search either in-process or on a process pool.

    With workers <= 1 no process is started and map runs sequentially.
    """

    def __init__(
        self,
        form: PlusSpaceForm,
        config: SearchConfig,
        workers: int = 1,
        terms: Optional[int] = None,
    ):
        """
        Initialize the column pool.

        Args:
            form: f_d shared by every column
            config: Search configuration
            workers: Number of worker processes
            terms: Number of coefficients per column (default config.terms)
        """
        self.form = form
        self.config = config
        self.workers = max(1, int(workers))
        self.terms = config.terms if terms is None else terms
        self.pool = None
        self.stats = {"columns": 0, "workers": self.workers, "seconds": 0.0}

    def start(self) -> "ColumnPool":
        """Start the worker processes (no-op for a single worker)."""
        if self.workers > 1 and self.pool is None:
            self.pool = multiprocessing.Pool(
                self.workers,
                initializer=_install,
                initargs=(self.form, self.config, self.terms),
            )
            logger.info("started %d column workers", self.workers)
        return self

    def map(self, discriminants: Sequence[int]) -> List[List[int]]:
        """
        Columns for the given discriminants, in order.

        Returns:
            list: One list of q^1..q^terms residues per discriminant
        """
        started = time.monotonic()
        if self.pool is None:
            columns = [
                column_vector(self.form, D, self.config, self.terms) for D in discriminants
            ]
        else:
            columns = self.pool.map(_column, list(discriminants))
        self.stats["columns"] += len(columns)
        self.stats["seconds"] += time.monotonic() - started
        logger.info(
            "computed %d columns of %d terms in %.2fs",
            len(columns),
            self.terms,
            time.monotonic() - started,
        )
        return columns

    def shutdown(self) -> None:
        """Stop the worker processes."""
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None

    def __enter__(self) -> "ColumnPool":
        return self.start()

    def __exit__(self, exc_type, exc, tb) -> None:
        if exc_type is not None and self.pool is not None:
            self.pool.terminate()
            self.pool.join()
            self.pool = None
        self.shutdown()
