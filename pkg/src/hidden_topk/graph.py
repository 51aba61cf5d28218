"""Bipartite ground-truth graphs: CSR storage, generators, and transforms.

The graph is the hidden object every algorithm tries to explore through the
probe oracle. It is immutable after construction and safe to share across
worker threads. Neighbor lists are kept as sorted arrays so that a single
edge probe is one binary search.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import ConfigError, IdRangeError


class BipartiteGraph:
    """A bipartite graph between ``n_b`` black and ``n_w`` white vertices.

    Stored in CSR form: ``indices[indptr[b]:indptr[b+1]]`` is the sorted
    array of white neighbor ids of black vertex ``b``.
    """

    __slots__ = ("n_b", "n_w", "indptr", "indices", "_indices_list", "_indptr_list")

    def __init__(
        self,
        n_b: int,
        n_w: int,
        indptr: np.ndarray,
        indices: np.ndarray,
        *,
        validate: bool = True,
    ):
        self.n_b = int(n_b)
        self.n_w = int(n_w)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self._indices_list: list[int] | None = None
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.n_b < 0 or self.n_w < 0:
            raise ConfigError("vertex counts must be non-negative")
        if self.indptr.shape != (self.n_b + 1,):
            raise ConfigError("indptr must have length n_b + 1")
        if self.indptr[0] != 0 or self.indptr[-1] != len(self.indices):
            raise ConfigError("indptr must start at 0 and end at len(indices)")
        if np.any(np.diff(self.indptr) < 0):
            raise ConfigError("indptr must be non-decreasing")
        if len(self.indices):
            if self.indices.min() < 0 or self.indices.max() >= self.n_w:
                raise ConfigError("neighbor ids must lie in [0, n_w)")
            # strictly increasing within each row: no duplicates, sorted
            deltas = np.diff(self.indices)
            interior = np.ones(len(deltas), dtype=bool)
            starts = self.indptr[1:-1]
            starts = starts[(starts > 0) & (starts < len(self.indices))]
            interior[starts - 1] = False  # deltas that cross a row boundary
            if np.any(deltas[interior] <= 0):
                raise ConfigError("neighbor lists must be sorted and duplicate-free")

    # -- oracle-side accessors (never available to the probing algorithms) --

    @property
    def m(self) -> int:
        """Number of edges."""
        return int(self.indptr[-1])

    def degree(self, b: int) -> int:
        """Exact degree of black vertex ``b``; does not touch any probe counter."""
        self.check_black(b)
        return int(self.indptr[b + 1] - self.indptr[b])

    def degrees(self) -> np.ndarray:
        """Exact degrees of all black vertices."""
        return np.diff(self.indptr)

    def neighbors(self, b: int) -> np.ndarray:
        self.check_black(b)
        return self.indices[self.indptr[b] : self.indptr[b + 1]]

    def has_edge(self, b: int, w: int) -> bool:
        """Membership test via binary search over the sorted neighbor row."""
        lo, hi = int(self.indptr[b]), int(self.indptr[b + 1])
        pos = int(np.searchsorted(self.indices[lo:hi], w))
        return pos < hi - lo and int(self.indices[lo + pos]) == w

    def indices_list(self) -> list[int]:
        """Neighbor array as a cached Python list (fast path for the pure-Python kernel)."""
        if self._indices_list is None:
            self._indices_list = self.indices.tolist()
        return self._indices_list

    def check_black(self, b: int) -> None:
        if not 0 <= b < self.n_b:
            raise IdRangeError(f"black vertex id {b} outside [0, {self.n_b})")

    def check_white(self, w: int) -> None:
        if not 0 <= w < self.n_w:
            raise IdRangeError(f"white vertex id {w} outside [0, {self.n_w})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.n_b == other.n_b
            and self.n_w == other.n_w
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:  # identity hash; graphs are mutable-free but big
        return id(self)

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_b={self.n_b}, n_w={self.n_w}, m={self.m})"

    @classmethod
    def from_edges(
        cls,
        n_b: int,
        n_w: int,
        edges: Iterable[tuple[int, int]] | np.ndarray,
    ) -> "BipartiteGraph":
        """Build a graph from (black, white) pairs; duplicates are collapsed."""
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            return cls(n_b, n_w, np.zeros(n_b + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ConfigError("edges must be (b, w) pairs")
        b, w = arr[:, 0], arr[:, 1]
        if b.min() < 0 or b.max() >= n_b:
            raise IdRangeError("black endpoint outside [0, n_b)")
        if w.min() < 0 or w.max() >= n_w:
            raise IdRangeError("white endpoint outside [0, n_w)")
        order = np.lexsort((w, b))
        b, w = b[order], w[order]
        keep = np.ones(len(b), dtype=bool)
        keep[1:] = (b[1:] != b[:-1]) | (w[1:] != w[:-1])
        b, w = b[keep], w[keep]
        indptr = np.zeros(n_b + 1, dtype=np.int64)
        np.cumsum(np.bincount(b, minlength=n_b), out=indptr[1:])
        return cls(n_b, n_w, indptr, w)


def swap_sides(graph: BipartiteGraph) -> BipartiteGraph:
    """Transpose: exchange the roles of black and white vertices. Involution."""
    rows = np.repeat(np.arange(graph.n_b, dtype=np.int64), np.diff(graph.indptr))
    order = np.argsort(graph.indices, kind="stable")  # stable keeps rows ascending per column
    new_indices = rows[order]
    indptr = np.zeros(graph.n_w + 1, dtype=np.int64)
    np.cumsum(np.bincount(graph.indices, minlength=graph.n_w), out=indptr[1:])
    return BipartiteGraph(graph.n_w, graph.n_b, indptr, new_indices, validate=False)


def clone_to_bipartite(
    edges: Iterable[tuple[int, int]] | np.ndarray,
    n_vertices: int | None = None,
) -> BipartiteGraph:
    """Clone a unipartite edge list into a bipartite graph.

    B and W are both copies of the original vertex set; (b_i, w_j) is an edge
    iff {i, j} was an edge. Black degrees equal the unipartite degrees.
    Self-loops are rejected; duplicate edges (either orientation) collapse.
    """
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if arr.size == 0:
        n = int(n_vertices or 0)
        return BipartiteGraph(n, n, np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
    u, v = arr[:, 0], arr[:, 1]
    if np.any(u == v):
        raise ConfigError("self-loops are not allowed in the unipartite input")
    if u.min() < 0 or v.min() < 0:
        raise IdRangeError("negative vertex id in unipartite edge list")
    n = int(n_vertices if n_vertices is not None else max(u.max(), v.max()) + 1)
    both = np.concatenate([arr, arr[:, ::-1]])
    return BipartiteGraph.from_edges(n, n, both)


def generate_random(n_b: int, n_w: int, edge_probability: float, seed: int) -> BipartiteGraph:
    """G(n_b x n_w, p): each pair is an edge independently with probability p."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ConfigError(f"edge_probability must be in [0, 1], got {edge_probability}")
    if n_b < 0 or n_w < 0:
        raise ConfigError("vertex counts must be non-negative")
    rng = np.random.default_rng(seed)
    if n_w == 0 or n_b == 0 or edge_probability == 0.0:
        return BipartiteGraph(n_b, n_w, np.zeros(n_b + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
    counts = rng.binomial(n_w, edge_probability, size=n_b).astype(np.int64)
    indptr = np.zeros(n_b + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    rows = []
    for b in range(n_b):
        c = counts[b]
        if c == n_w:
            rows.append(np.arange(n_w, dtype=np.int64))
        elif c:
            rows.append(np.sort(rng.choice(n_w, size=c, replace=False)).astype(np.int64))
    indices = np.concatenate(rows) if rows else np.empty(0, dtype=np.int64)
    return BipartiteGraph(n_b, n_w, indptr, indices, validate=False)


def generate_powerlaw(
    n_b: int,
    n_w: int,
    exponent: float,
    mean_degree: float,
    seed: int,
) -> BipartiteGraph:
    """Skewed instance: black degrees follow a truncated discrete power law.

    Degrees are ``min(n_w, floor(x_min * U^(-1/(exponent-1))))`` with the scale
    ``x_min`` solved numerically so the distribution mean equals
    ``mean_degree``. Neighbors are sampled uniformly without replacement.
    """
    if exponent <= 1.0:
        raise ConfigError("exponent must be > 1")
    if mean_degree < 0 or mean_degree > n_w:
        raise ConfigError(f"mean_degree must be in [0, n_w]; got {mean_degree} with n_w={n_w}")
    rng = np.random.default_rng(seed)
    empty = BipartiteGraph(n_b, n_w, np.zeros(n_b + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
    if n_b == 0 or n_w == 0 or mean_degree == 0:
        return empty

    a = exponent - 1.0
    d = np.arange(1, n_w + 1, dtype=np.float64)

    def dist_mean(x_min: float) -> float:
        # E[min(n_w, floor(Y))] = sum_{d=1..n_w} P(Y >= d), Y ~ Pareto(x_min, a)
        return float(np.minimum(1.0, (x_min / d) ** a).sum())

    if mean_degree >= n_w:
        x_min = float(n_w)
    else:
        lo, hi = 0.0, float(n_w)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if dist_mean(mid) < mean_degree:
                lo = mid
            else:
                hi = mid
        x_min = 0.5 * (lo + hi)

    u = rng.random(n_b)
    degrees = np.minimum(n_w, np.floor(x_min * u ** (-1.0 / a))).astype(np.int64)
    indptr = np.zeros(n_b + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    rows = []
    for b in range(n_b):
        c = degrees[b]
        if c == n_w:
            rows.append(np.arange(n_w, dtype=np.int64))
        elif c:
            rows.append(np.sort(rng.choice(n_w, size=c, replace=False)).astype(np.int64))
    indices = np.concatenate(rows) if rows else np.empty(0, dtype=np.int64)
    return BipartiteGraph(n_b, n_w, indptr, indices, validate=False)
