"""Per-vertex probing state, stored struct-of-arrays for kernel access.

``StateTable`` owns one row per black vertex: positives seen (s), negatives
seen (e), the probe-order cursor, the done flag, and (for the sampling
algorithm) the prediction and the set of white ids probed during sampling.
``VertexState`` is a mutable per-vertex view over one row; routines written
against a single vertex operate through it.
"""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolation
from .graph import BipartiteGraph

_EMPTY_I64 = np.empty(0, dtype=np.int64)


class StateTable:
    """Probing bookkeeping for all black vertices of one run."""

    def __init__(self, n_b: int, n_w: int):
        self.n_b = int(n_b)
        self.n_w = int(n_w)
        self.s = np.zeros(n_b, dtype=np.int64)
        self.e = np.zeros(n_b, dtype=np.int64)
        self.cursor = np.zeros(n_b, dtype=np.int64)
        self.done = np.zeros(n_b, dtype=np.uint8)
        self.prediction = np.full(n_b, -1, dtype=np.int64)
        # per-vertex sampled white ids (sorted); populated by the prediction phase
        self._sampled_lists: list[np.ndarray] | None = None
        self._sampled_flat: np.ndarray | None = None
        self._sampled_indptr: np.ndarray | None = None
        self._sampled_py: tuple[list[int], list[int]] | None = None
        if n_w == 0:
            self.done[:] = 1  # nothing to probe; degree 0 is exact

    # -- sampled-set bookkeeping ------------------------------------------

    def set_sampled(self, vertex: int, white_ids: np.ndarray) -> None:
        """Record the (sorted) white ids probed for ``vertex`` during sampling."""
        if self._sampled_lists is None:
            self._sampled_lists = [_EMPTY_I64] * self.n_b
        self._sampled_lists[vertex] = np.asarray(white_ids, dtype=np.int64)
        self._sampled_flat = None  # invalidate the flattened caches
        self._sampled_py = None

    def sampled_ids(self, vertex: int) -> np.ndarray:
        if self._sampled_lists is None:
            return _EMPTY_I64
        return self._sampled_lists[vertex]

    def sampled_arrays(self) -> tuple[np.ndarray, np.ndarray] | tuple[None, None]:
        """Flattened (values, indptr) view of all sampled sets, for the kernels."""
        if self._sampled_lists is None:
            return None, None
        if self._sampled_flat is None:
            lengths = np.fromiter(
                (len(a) for a in self._sampled_lists), dtype=np.int64, count=self.n_b
            )
            indptr = np.zeros(self.n_b + 1, dtype=np.int64)
            np.cumsum(lengths, out=indptr[1:])
            self._sampled_flat = (
                np.concatenate(self._sampled_lists) if indptr[-1] else _EMPTY_I64.copy()
            )
            self._sampled_indptr = indptr
        return self._sampled_flat, self._sampled_indptr

    def sampled_python(self) -> tuple[list[int], list[int]] | tuple[None, None]:
        """Flattened sampled sets as plain lists (pure-Python kernel fast path)."""
        flat, indptr = self.sampled_arrays()
        if flat is None:
            return None, None
        if self._sampled_py is None:
            self._sampled_py = (flat.tolist(), indptr.tolist())
        return self._sampled_py

    # -- whole-table queries ----------------------------------------------

    def live_ids(self) -> np.ndarray:
        """Ids of vertices that still have unprobed white vertices."""
        return np.nonzero(self.done == 0)[0].astype(np.int64)

    def upper_bounds(self, ids: np.ndarray | None = None) -> np.ndarray:
        """Degree upper bound n_w - e(u) for the given vertices (all if None)."""
        e = self.e if ids is None else self.e[ids]
        return self.n_w - e

    def view(self, vertex: int) -> "VertexState":
        return VertexState(self, vertex)


class VertexState:
    """Mutable view of one vertex's probing state inside a StateTable."""

    __slots__ = ("table", "vertex")

    def __init__(self, table: StateTable, vertex: int):
        if not 0 <= vertex < table.n_b:
            raise InvariantViolation(f"vertex {vertex} outside the state table")
        self.table = table
        self.vertex = vertex

    @property
    def s(self) -> int:
        return int(self.table.s[self.vertex])

    @property
    def e(self) -> int:
        return int(self.table.e[self.vertex])

    @property
    def cursor(self) -> int:
        return int(self.table.cursor[self.vertex])

    @property
    def done(self) -> bool:
        return bool(self.table.done[self.vertex])

    @property
    def prediction(self) -> int:
        return int(self.table.prediction[self.vertex])

    @property
    def sampled(self) -> np.ndarray:
        return self.table.sampled_ids(self.vertex)

    @property
    def degree_upper_bound(self) -> int:
        return self.table.n_w - self.e

    @property
    def exact_degree(self) -> int:
        if not self.done:
            raise InvariantViolation(f"vertex {self.vertex} is not fully probed")
        return self.s

    def __repr__(self) -> str:
        return (
            f"VertexState(vertex={self.vertex}, s={self.s}, e={self.e}, "
            f"cursor={self.cursor}, done={self.done})"
        )


def check_degree_sandwich(graph: BipartiteGraph, table: StateTable) -> None:
    """Audit: assert s(u) <= true degree <= n_w - e(u) for every vertex."""
    true = graph.degrees()
    if np.any(table.s > true) or np.any(true > table.n_w - table.e):
        bad = np.nonzero((table.s > true) | (true > table.n_w - table.e))[0]
        raise InvariantViolation(
            f"degree sandwich violated for vertices {bad[:10].tolist()}"
        )
