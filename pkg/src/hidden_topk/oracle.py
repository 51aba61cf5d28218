"""The edge-probing oracle: the only gate through which algorithms see edges.

Every probe is counted. The counter is exact under concurrency: single
probes increment under a lock, batch kernels report their local counts
which are added at round barriers.
"""

from __future__ import annotations

import threading
import time

from .errors import IdRangeError, InvariantViolation, ReprobedPairError
from .graph import BipartiteGraph


class ProbeOracle:
    """Counting wrapper around the hidden graph's membership function.

    Parameters
    ----------
    graph : BipartiteGraph
        Ground truth; never exposed to algorithms except through probes.
    delay_us : int
        Artificial per-probe latency in microseconds (sleep-based), modeling
        an expensive probe function. 0 disables it.
    audit : bool
        When true, every probed pair is recorded and a repeated probe of the
        same pair raises ReprobedPairError. Costs memory; off by default.
    """

    def __init__(self, graph: BipartiteGraph, *, delay_us: int = 0, audit: bool = False):
        if delay_us < 0:
            raise ValueError("delay_us must be >= 0")
        self.graph = graph
        self.delay_us = int(delay_us)
        self._probes = 0
        self._lock = threading.Lock()
        self._audit_pairs: set[tuple[int, int]] | None = set() if audit else None

    @property
    def probes(self) -> int:
        """Total number of edge-probing queries issued so far."""
        return self._probes

    @property
    def audit_enabled(self) -> bool:
        return self._audit_pairs is not None

    @property
    def audit_pairs(self) -> set[tuple[int, int]]:
        if self._audit_pairs is None:
            raise InvariantViolation("oracle was not created with audit=True")
        return self._audit_pairs

    def probe(self, b: int, w: int) -> bool:
        """Answer one edge-probing query f(b, w); counts exactly one probe."""
        if not 0 <= b < self.graph.n_b:
            raise IdRangeError(f"black vertex id {b} outside [0, {self.graph.n_b})")
        if not 0 <= w < self.graph.n_w:
            raise IdRangeError(f"white vertex id {w} outside [0, {self.graph.n_w})")
        if self.delay_us:
            time.sleep(self.delay_us * 1e-6)
        with self._lock:
            if self._audit_pairs is not None:
                pair = (b, w)
                if pair in self._audit_pairs:
                    raise ReprobedPairError(f"pair ({b}, {w}) probed twice")
                self._audit_pairs.add(pair)
            self._probes += 1
        return self.graph.has_edge(b, w)

    def add_probes(self, n: int) -> None:
        """Account for n probes issued by a batch kernel on this graph."""
        if n < 0:
            raise ValueError("probe count must be >= 0")
        with self._lock:
            self._probes += n
