"""Weighted graphs: file format, validation, structure classification, subdivision.

Vertices are the dense 1-based integers ``1..n``. Weights are exact
:class:`~fractions.Fraction` values; floats are never accepted.

Graph file format::

    # comment
    n 3
    e 1 2 1/2
    e 2 3 1/2
    e 1 3 1/2
"""
from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import GraphError, GraphFormatError
from .exact import format_rational, to_fraction

_WEIGHT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class Edge(NamedTuple):
    u: int
    v: int
    w: Fraction


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected edge-weighted graph on vertices ``1..n``.

    Construction only normalizes endpoints (``u <= v``) and sorts edges; it does
    not enforce admissibility. Use :func:`validate` or :func:`require_admissible`
    for that, so that bad graphs can still be inspected and reported on.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        norm = []
        for e in self.edges:
            u, v, w = e
            u, v = int(u), int(v)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge ({u},{v}) has a vertex outside 1..{self.n}")
            if u > v:
                u, v = v, u
            norm.append(Edge(u, v, to_fraction(w)))
        norm.sort(key=lambda e: (e.u, e.v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "WeightedGraph":
        return cls(n, tuple(Edge(*e) for e in edges))

    @cached_property
    def adjacency(self) -> dict[int, dict[int, Fraction]]:
        adj: dict[int, dict[int, Fraction]] = {v: {} for v in range(1, self.n + 1)}
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def weight(self, u: int, v: int) -> Fraction:
        try:
            return self.adjacency[u][v]
        except KeyError:
            raise GraphError(f"no edge ({u},{v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, {})

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def weights(self) -> list[Fraction]:
        return [e.w for e in self.edges]


def parse_graph(text: str) -> WeightedGraph:
    """Parse graph file text. Raises :class:`GraphFormatError` with the offending line number."""
    n = None
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError("expected 'n <count>' as the first line", lineno)
            n = int(parts[1])
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if parts[0] != "e" or len(parts) != 4:
            raise GraphFormatError(f"expected 'e <u> <v> <weight>', got {line!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError("vertex indices must be integers", lineno) from None
        if not _WEIGHT_RE.match(parts[3]):
            raise GraphFormatError(f"weight {parts[3]!r} is not <int> or <int>/<int>", lineno)
        try:
            w = Fraction(parts[3])
        except ZeroDivisionError:
            raise GraphFormatError("zero denominator in weight", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex index out of range 1..{n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if w <= 0:
            raise GraphFormatError(f"nonpositive weight {parts[3]}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(Edge(u, v, w))
    if n is None:
        raise GraphFormatError("missing 'n <count>' line")
    return WeightedGraph(n, tuple(edges))


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {e.u} {e.v} {format_rational(e.w)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def _components(n: int, edges: Iterable[Edge]) -> int:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def validate(g: WeightedGraph) -> list[str]:
    """List every admissibility violation. An empty list means the graph is admissible."""
    report = []
    seen = set()
    for u, v, w in g.edges:
        if u == v:
            report.append(f"self-loop at vertex {u}")
        if w <= 0:
            report.append(f"nonpositive weight {format_rational(w)} on edge ({u},{v})")
        if (u, v) in seen:
            report.append(f"duplicate edge ({u},{v})")
        seen.add((u, v))
    if _components(g.n, g.edges) > 1:
        report.append("disconnected")
    return report


def require_admissible(g: WeightedGraph) -> None:
    report = validate(g)
    if report:
        raise GraphError("inadmissible graph: " + "; ".join(report))


class Kind(str, enum.Enum):
    TREE = "Tree"
    UNICYCLIC = "Unicyclic"
    OTHER = "Other"


@dataclass(frozen=True)
class StructureClass:
    kind: Kind
    cycle_vertices: tuple[int, ...] = ()
    cycle_length: int = 0
    pendant_count: int = 0

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "cycle_vertices": list(self.cycle_vertices),
            "cycle_length": self.cycle_length,
            "pendant_count": self.pendant_count,
        }


def _strip_leaves(g: WeightedGraph) -> set[int]:
    """Repeatedly remove degree-1 vertices; return what survives."""
    degree = {v: len(nb) for v, nb in g.adjacency.items()}
    alive = set(degree)
    queue = deque(v for v, d in degree.items() if d <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.adjacency[v]:
            if u in alive:
                degree[u] -= 1
                if degree[u] == 1:
                    queue.append(u)
    return alive


def classify_structure(g: WeightedGraph) -> StructureClass:
    """Tree, unicyclic (with its cycle in cyclic order) or other. Expects an admissible graph."""
    m = g.edge_count
    if m == g.n - 1:
        return StructureClass(Kind.TREE)
    if m != g.n:
        return StructureClass(Kind.OTHER)
    core = _strip_leaves(g)
    # a connected graph with |E| = n has exactly one cycle, and the 2-core is that cycle
    start = min(core)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(u for u in g.adjacency[cur] if u in core and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(core):
        return StructureClass(Kind.OTHER)
    return StructureClass(Kind.UNICYCLIC, tuple(order), len(order), g.n - len(order))


def subdivide_edge(g: WeightedGraph, edge: tuple[int, int], w1, w2) -> WeightedGraph:
    """Replace edge ``(u, v)`` by ``u -- n+1 -- v`` with weights ``w1`` (at ``u``) and ``w2`` (at ``v``)."""
    u, v = edge
    w1, w2 = to_fraction(w1), to_fraction(w2)
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u},{v}) to subdivide")
    if w1 <= 0 or w2 <= 0:
        raise GraphError("split weights must be positive")
    w = g.weight(u, v)
    if w1 + w2 != w:
        raise GraphError(
            f"split {format_rational(w1)} + {format_rational(w2)} does not sum to {format_rational(w)}"
        )
    new = g.n + 1
    edges = [e for e in g.edges if {e.u, e.v} != {u, v}]
    edges += [Edge(u, new, w1), Edge(new, v, w2)]
    return WeightedGraph(new, tuple(edges))


def relabel(g: WeightedGraph, perm: dict[int, int] | list[int]) -> WeightedGraph:
    """Rename vertex ``v`` to ``perm[v]``. ``perm`` must be a bijection of ``1..n``."""
    if isinstance(perm, list):
        perm = {v: perm[v - 1] for v in range(1, g.n + 1)}
    if sorted(perm.values()) != list(range(1, g.n + 1)):
        raise GraphError("relabeling is not a permutation of 1..n")
    return WeightedGraph(g.n, tuple(Edge(perm[e.u], perm[e.v], e.w) for e in g.edges))
