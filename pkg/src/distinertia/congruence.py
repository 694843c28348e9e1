"""Congruence reduction of tree and triangle-unicyclic distance matrices.

A distance matrix is relabelled so that a root comes first and every other
vertex follows its parent, then pendant vertices are eliminated layer by layer
from the deepest one inwards: vertex ``i`` with parent ``a(i)`` gets row and
column ``a(i)`` subtracted from row and column ``i``. What remains is the
arrowhead normal form::

    [ 0     d1    d2   ...  ]
    [ d1   -2d1   z    0 .. ]
    [ d2    z    -2d2  0 .. ]
    [ ...   0     0   -2d3  ]

where ``z`` is only present for a triangle and the tail is diagonal.
Indices inside traces are 1-based positions in the relabelled matrix.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .distance import DistanceMatrix
from .errors import GraphError, ReductionError
from .exact import Matrix, as_matrix, format_rational, principal_submatrix, zeros
from .graph import Kind, WeightedGraph, classify_structure


@dataclass(frozen=True)
class ElementaryStep:
    """Subtract row ``j`` from row ``i``, then column ``j`` from column ``i`` (1-based)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("elementary step needs distinct indices")


@dataclass(frozen=True)
class NormalForm:
    border: tuple[Fraction, ...]
    coupling: Fraction | None = None

    @property
    def n(self) -> int:
        return len(self.border) + 1

    def check(self) -> None:
        if any(d <= 0 for d in self.border):
            raise ValueError("normal form border must be positive")
        if self.coupling is not None:
            if len(self.border) < 2:
                raise ValueError("coupling needs at least two border entries")
            d1, d2 = self.border[0], self.border[1]
            if not self.coupling ** 2 < 4 * d1 * d2:
                raise ValueError("coupling violates z^2 < 4*d1*d2")

    def matrix(self) -> Matrix:
        n = self.n
        m = zeros(n)
        for k, d in enumerate(self.border, start=1):
            m[0][k] = m[k][0] = d
            m[k][k] = -2 * d
        if self.coupling is not None:
            m[1][2] = m[2][1] = self.coupling
        return tuple(tuple(row) for row in m)

    def to_json(self) -> dict:
        return {
            "border": [format_rational(d) for d in self.border],
            "coupling": None if self.coupling is None else format_rational(self.coupling),
        }


@dataclass(frozen=True)
class CongruenceTrace:
    """``ordering`` relabels the input (position ``k`` holds vertex ``ordering[k-1]``);
    ``steps`` are then applied in order and give ``result``."""

    ordering: tuple[int, ...]
    steps: tuple[ElementaryStep, ...]
    result: Matrix
    normal_form: NormalForm | None = None

    @property
    def root(self) -> int:
        return self.ordering[0]

    def to_json(self) -> dict:
        return {
            "ordering": list(self.ordering),
            "steps": [[s.i, s.j] for s in self.steps],
            "normal_form": self.normal_form.to_json() if self.normal_form else None,
        }


def _step_inplace(m: list[list[Fraction]], i: int, j: int) -> None:
    ri, rj = m[i], m[j]
    for c in range(len(m)):
        ri[c] -= rj[c]
    for r in m:
        r[i] -= r[j]


def elementary_congruence(m, step: ElementaryStep) -> Matrix:
    """Return ``A M A^T`` with ``A = I - E(i, j)``."""
    m = as_matrix(m)
    n = len(m)
    if not (1 <= step.i <= n and 1 <= step.j <= n):
        raise IndexError(f"step {step} out of range for dimension {n}")
    work = [list(row) for row in m]
    _step_inplace(work, step.i - 1, step.j - 1)
    return tuple(tuple(row) for row in work)


def inverse_congruence(m, step: ElementaryStep) -> Matrix:
    """Undo :func:`elementary_congruence` (add row/column ``j`` back to ``i``)."""
    m = as_matrix(m)
    work = [list(row) for row in m]
    i, j = step.i - 1, step.j - 1
    for c in range(len(work)):
        work[i][c] += work[j][c]
    for r in work:
        r[i] += r[j]
    return tuple(tuple(row) for row in work)


def apply_trace(m, trace: CongruenceTrace) -> Matrix:
    """Relabel ``m`` by ``trace.ordering`` and replay every step."""
    m = as_matrix(m)
    if len(m) != len(trace.ordering):
        raise ValueError(f"dimension {len(m)} does not match trace of size {len(trace.ordering)}")
    work = [list(row) for row in principal_submatrix(m, [v - 1 for v in trace.ordering])]
    for s in trace.steps:
        _step_inplace(work, s.i - 1, s.j - 1)
    return tuple(tuple(row) for row in work)


def _bfs_order(g: WeightedGraph, root: int, first: Sequence[int], skip: tuple[int, int] | None):
    """Breadth-first layering from ``root``; within a layer ``first`` vertices lead, then by index."""
    depth = {root: 0}
    parent: dict[int, int] = {}
    layer = [root]
    layers = [[root]]
    while layer:
        nxt = []
        for v in layer:
            for u in g.adjacency[v]:
                if skip and {u, v} == set(skip):
                    continue
                if u not in depth:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    nxt.append(u)
        nxt.sort(key=lambda u: (u not in first, u))
        if nxt:
            layers.append(nxt)
        layer = nxt
    if len(depth) != g.n:
        raise GraphError("graph is disconnected")
    ordering = [v for lay in layers for v in lay]
    return ordering, parent


def elimination_ordering(g: WeightedGraph, root: int | None = None):
    """Root-first ordering by unweighted depth, and each vertex's parent towards the root.

    For a triangle-unicyclic graph the root must lie on the triangle, and the
    other two triangle vertices come second and third.
    """
    sc = classify_structure(g)
    if sc.kind is Kind.TREE:
        root = 1 if root is None else root
        if not 1 <= root <= g.n:
            raise GraphError(f"root {root} out of range")
        ordering, parent = _bfs_order(g, root, (), None)
    elif sc.kind is Kind.UNICYCLIC and sc.cycle_length == 3:
        cyc = sc.cycle_vertices
        root = min(cyc) if root is None else root
        if root not in cyc:
            raise GraphError(f"root {root} is not on the triangle {cyc}")
        a, b = sorted(v for v in cyc if v != root)
        ordering, parent = _bfs_order(g, root, (a, b), (a, b))
    else:
        raise GraphError("elimination ordering needs a tree or a unicyclic graph with a 3-cycle")
    return tuple(ordering), parent


def _steps(ordering: Sequence[int], parent_map: dict[int, int]) -> list[ElementaryStep]:
    pos = {v: k for k, v in enumerate(ordering, start=1)}
    depth = {ordering[0]: 0}
    for v in ordering[1:]:
        p = parent_map.get(v)
        if p is None or p not in depth:
            raise ReductionError(f"vertex {v} does not follow its parent in the ordering")
        depth[v] = depth[p] + 1
    # deepest layer first; inside a layer targets are disjoint so the steps commute
    targets = sorted(ordering[1:], key=lambda v: (-depth[v], pos[v]))
    return [ElementaryStep(pos[v], pos[parent_map[v]]) for v in targets]


def _reduce(d: DistanceMatrix, ordering, parent_map, coupled: bool):
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, d.n + 1)):
        raise ValueError("ordering is not a permutation of the vertices")
    steps = _steps(ordering, parent_map)
    work = [list(row) for row in d.permuted(ordering)]
    for s in steps:
        _step_inplace(work, s.i - 1, s.j - 1)
    result = tuple(tuple(row) for row in work)

    n = len(result)
    border = tuple(result[0][1:])
    for i in range(n):
        for j in range(n):
            x = result[i][j]
            if i == 0 or j == 0:
                expected = Fraction(0) if i == j else x
            elif i == j:
                expected = -2 * border[i - 1]
            elif coupled and {i, j} == {1, 2}:
                continue
            else:
                expected = Fraction(0)
            if x != expected:
                raise ReductionError(
                    f"entry ({i + 1},{j + 1}) is {format_rational(x)} after elimination; "
                    "input is not the distance matrix of the expected graph class"
                )
    if any(b <= 0 for b in border):
        raise ReductionError("nonpositive border entry after elimination")
    nf = NormalForm(border, result[1][2] if coupled else None)
    return nf, CongruenceTrace(ordering, tuple(steps), result, nf)


def reduce_tree(d: DistanceMatrix, ordering, parent_map) -> tuple[NormalForm, CongruenceTrace]:
    """Reduce a tree distance matrix. ``d`` is indexed by vertex label; ``ordering`` relabels it."""
    return _reduce(d, ordering, parent_map, coupled=False)


def reduce_unicyclic3(d: DistanceMatrix, ordering, parent_map) -> tuple[NormalForm, CongruenceTrace]:
    """Reduce a triangle-unicyclic distance matrix; the triangle must occupy positions 1-3."""
    ordering = tuple(ordering)
    if d.n < 3:
        raise ReductionError("a triangle needs at least three vertices")
    r, a, b = ordering[:3]
    if parent_map.get(a) != r or parent_map.get(b) != r:
        raise ReductionError("the two triangle vertices after the root must both hang off the root")
    nf, trace = _reduce(d, ordering, parent_map, coupled=True)
    z = d.dist(a, b) - d.dist(r, a) - d.dist(r, b)
    if nf.coupling != z:
        raise ReductionError("coupling term disagrees with the shortest-path distances")
    if not z * z < 4 * d.dist(r, a) * d.dist(r, b):
        raise ReductionError("coupling violates z^2 < 4*d12*d13")
    return nf, trace


def reduce_graph(g: WeightedGraph, d: DistanceMatrix, root: int | None = None):
    """Pick the right reduction for ``g`` and run it."""
    ordering, parent = elimination_ordering(g, root)
    if classify_structure(g).kind is Kind.TREE:
        return reduce_tree(d, ordering, parent)
    return reduce_unicyclic3(d, ordering, parent)
