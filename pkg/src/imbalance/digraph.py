"""Oriented digraphs and their imbalance sequences.

An :class:`OrientedDigraph` has no loops and at most one arc per unordered
vertex pair. It is stored as an antisymmetric ``int8`` matrix ``adj`` with
``adj[u, v] == 1`` for an arc ``u -> v`` and ``adj[v, u] == -1`` alongside,
so a row sum is exactly the vertex imbalance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

__all__ = [
    "DigraphError",
    "OrientedDigraph",
    "MultiDigraph",
    "imbalance_sequence",
    "transitive_tournament",
]


class DigraphError(ValueError):
    """Loop, opposed pair, duplicate arc or out-of-range vertex."""


class OrientedDigraph:
    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DigraphError(f"vertex count must be non-negative, got {n}")
        self.n = int(n)
        self.adj = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in arcs:
            self.add_arc(u, v)

    @classmethod
    def from_matrix(cls, adj: np.ndarray) -> "OrientedDigraph":
        """Wrap an antisymmetric {-1, 0, 1} matrix (copied)."""
        adj = np.asarray(adj, dtype=np.int8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise DigraphError(f"expected a square matrix, got shape {adj.shape}")
        if np.any(np.abs(adj) > 1) or np.any(adj != -adj.T):
            raise DigraphError("matrix must be antisymmetric with entries in {-1, 0, 1}")
        g = cls(adj.shape[0])
        g.adj[...] = adj
        return g

    def _check(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DigraphError(f"arc ({u}, {v}) out of range for n={self.n}")
        if u == v:
            raise DigraphError(f"loop at vertex {u}")

    def has_arc(self, u: int, v: int) -> bool:
        self._check(u, v)
        return bool(self.adj[u, v] == 1)

    def add_arc(self, u: int, v: int) -> None:
        self._check(u, v)
        state = self.adj[u, v]
        if state == 1:
            raise DigraphError(f"arc ({u}, {v}) already present")
        if state == -1:
            raise DigraphError(f"arc ({u}, {v}) would oppose existing arc ({v}, {u})")
        self.adj[u, v] = 1
        self.adj[v, u] = -1

    def remove_arc(self, u: int, v: int) -> None:
        self._check(u, v)
        if self.adj[u, v] != 1:
            raise DigraphError(f"arc ({u}, {v}) not present")
        self.adj[u, v] = 0
        self.adj[v, u] = 0

    @property
    def arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic order."""
        us, vs = np.nonzero(self.adj == 1)
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def num_arcs(self) -> int:
        return int(np.count_nonzero(self.adj == 1))

    def imbalances(self) -> list[int]:
        return self.adj.sum(axis=1, dtype=np.int64).tolist()

    def relabel(self, mapping) -> "OrientedDigraph":
        """New digraph where vertex ``v`` becomes ``mapping[v]``."""
        mapping = np.asarray(mapping, dtype=np.intp)
        if sorted(mapping.tolist()) != list(range(self.n)):
            raise DigraphError("mapping must be a permutation of the vertices")
        g = OrientedDigraph(self.n)
        g.adj[np.ix_(mapping, mapping)] = self.adj
        return g

    def copy(self) -> "OrientedDigraph":
        g = OrientedDigraph(self.n)
        g.adj[...] = self.adj
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedDigraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"OrientedDigraph(n={self.n}, arcs={self.arcs})"


@dataclass
class MultiDigraph:
    """Loopless digraph allowing repeated arcs; output type of the multigraph realizer."""

    n: int
    arcs: Counter = field(default_factory=Counter)

    def __post_init__(self) -> None:
        self.arcs = Counter(self.arcs)
        for (u, v), mult in self.arcs.items():
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DigraphError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if mult <= 0:
                raise DigraphError(f"arc ({u}, {v}) has multiplicity {mult}")

    def imbalances(self) -> list[int]:
        b = [0] * self.n
        for (u, v), mult in self.arcs.items():
            b[u] += mult
            b[v] -= mult
        return b


def imbalance_sequence(g: Union[OrientedDigraph, MultiDigraph]) -> list[int]:
    """Out-degree minus in-degree of every vertex, in vertex order."""
    return g.imbalances()


def transitive_tournament(n: int) -> OrientedDigraph:
    """All arcs ``i -> j`` with ``i < j``."""
    g = OrientedDigraph(n)
    upper = np.triu(np.ones((n, n), dtype=np.int8), k=1)
    g.adj[...] = upper - upper.T
    return g
