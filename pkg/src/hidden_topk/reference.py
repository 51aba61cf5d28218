"""Brute-force reference answers straight from the ground truth.

These are the correctness oracles for every probing algorithm. They read
the graph directly and never touch a probe counter.
"""

from __future__ import annotations

from .errors import ConfigError
from .graph import BipartiteGraph
from .results import ResultSet, kth_value

import numpy as np


def brute_force_topk(graph: BipartiteGraph, k: int) -> ResultSet:
    """Exact tie-closed top-k by computing every degree directly."""
    if k < 1:
        raise ConfigError("k must be >= 1")
    degrees = graph.degrees()
    return ResultSet.from_degrees(np.arange(graph.n_b), degrees, k)


def kth_degree(graph: BipartiteGraph, k: int) -> int:
    """The k-th largest true degree (with multiplicity)."""
    if not 1 <= k <= graph.n_b:
        raise ConfigError(f"k={k} outside [1, {graph.n_b}]")
    return kth_value(graph.degrees(), k)
