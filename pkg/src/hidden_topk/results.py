"""Answer sets and run outcomes.

The answer to a top-k query is tie-closed: with d* the degree of the k-th
entry in descending order, every black vertex of degree >= d* is included.
All listed degrees are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import ConfigError, InvariantViolation

if TYPE_CHECKING:
    from .executor import RoundStats


@dataclass(frozen=True)
class ResultSet:
    """Tie-closed top-k answer: (vertex, exact degree) pairs.

    Entries are sorted by degree descending, then vertex id ascending.
    ``k_capped`` flags a request for more vertices than exist.
    """

    entries: tuple[tuple[int, int], ...]
    k: int
    k_capped: bool = False

    @classmethod
    def from_degrees(
        cls,
        vertices: Sequence[int] | np.ndarray,
        degrees: Sequence[int] | np.ndarray,
        k: int,
    ) -> "ResultSet":
        """Tie-closed top-k of an exact (vertex, degree) pool.

        The pool must contain every vertex whose degree reaches the k-th
        ranked value; the caller is responsible for that guarantee.
        """
        if k < 1:
            raise ConfigError("k must be >= 1")
        v = np.asarray(vertices, dtype=np.int64)
        d = np.asarray(degrees, dtype=np.int64)
        if len(v) == 0:
            return cls(entries=(), k=k, k_capped=True)
        order = np.lexsort((v, -d))
        v, d = v[order], d[order]
        capped = k > len(v)
        d_star = int(d[min(k, len(v)) - 1])
        keep = d >= d_star
        entries = tuple(zip(v[keep].tolist(), d[keep].tolist()))
        return cls(entries=entries, k=k, k_capped=capped)

    @property
    def top_degree(self) -> int:
        return self.entries[0][1] if self.entries else 0

    @property
    def threshold_degree(self) -> int:
        """The smallest degree included (d*)."""
        return self.entries[-1][1] if self.entries else 0

    def vertices(self) -> list[int]:
        return [v for v, _ in self.entries]

    def degrees(self) -> list[int]:
        return [d for _, d in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def assert_valid(self, n_b: int | None = None) -> None:
        """Structural checks: ordering, uniqueness, and size vs k."""
        for (v1, d1), (v2, d2) in zip(self.entries, self.entries[1:]):
            if (d1, -v1) < (d2, -v2):
                raise InvariantViolation("entries not sorted by degree desc, vertex asc")
        if len(set(self.vertices())) != len(self.entries):
            raise InvariantViolation("duplicate vertex in result")
        if n_b is not None and not self.k_capped and len(self.entries) < min(self.k, n_b):
            raise InvariantViolation("result smaller than k with enough vertices present")


def kth_value(values: Sequence[int] | np.ndarray, k: int) -> int:
    """k-th largest element counted with multiplicity; clamps k to len(values)."""
    arr = np.asarray(values, dtype=np.int64)
    if arr.size == 0:
        return 0
    k = min(k, arr.size)
    return int(np.partition(arr, arr.size - k)[arr.size - k])


@dataclass
class RunResult:
    """Outcome of one algorithm run: the answer plus probe accounting."""

    result: ResultSet
    probes: int
    rounds: "list[RoundStats]" = field(default_factory=list)
    # 1-based budget round in which each vertex completed; 0 = completed
    # outside the budget rounds (final/threshold phase), -1 = never completed.
    completion_rounds: np.ndarray | None = None
    budgets: list[int] | None = None
