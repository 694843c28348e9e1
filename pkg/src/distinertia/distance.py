"""Exact all-pairs shortest-path distance matrices."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DisconnectedGraphError, GraphError
from .exact import Matrix, principal_submatrix, to_float, to_fraction, to_json
from .graph import WeightedGraph


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric hollow matrix of exact distances; row/column ``i`` is vertex ``i+1``."""

    entries: Matrix

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def dist(self, u: int, v: int) -> Fraction:
        """Distance between 1-based vertices ``u`` and ``v``."""
        return self.entries[u - 1][v - 1]

    def restrict(self, vertices: Sequence[int]) -> Matrix:
        """Principal submatrix on the given 1-based vertices."""
        return principal_submatrix(self.entries, [v - 1 for v in vertices])

    def permuted(self, ordering: Sequence[int]) -> Matrix:
        return self.restrict(ordering)

    def as_float(self) -> np.ndarray:
        return to_float(self.entries)

    def to_json(self) -> list[list[str]]:
        return to_json(self.entries)


def single_source(g: WeightedGraph, source: int) -> list[Fraction | None]:
    """Dijkstra from ``source`` over exact weights; heap ties broken by vertex index."""
    dist: list[Fraction | None] = [None] * (g.n + 1)
    done = [False] * (g.n + 1)
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    adj = g.adjacency
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for u, w in adj[v].items():
            nd = d + w
            if dist[u] is None or nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def distance_matrix(g: WeightedGraph) -> DistanceMatrix:
    for e in g.edges:
        if e.w <= 0:
            raise GraphError(f"nonpositive weight on edge ({e.u},{e.v})")
    rows = []
    for s in range(1, g.n + 1):
        dist = single_source(g, s)
        if any(d is None for d in dist[1:]):
            unreachable = next(v for v in range(1, g.n + 1) if dist[v] is None)
            raise DisconnectedGraphError(f"vertex {unreachable} unreachable from {s}")
        rows.append(tuple(dist[1:]))
    return DistanceMatrix(tuple(rows))


def scale_matrix(d: DistanceMatrix, c) -> DistanceMatrix:
    c = to_fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return DistanceMatrix(tuple(tuple(c * x for x in row) for row in d.entries))
