"""Cycle-parity classification, the unweighted lift, and theorem-based inertia prediction.

The lift multiplies every weight by one rational scale chosen so that all
weights become coprime integers, then subdivides each edge into unit edges.
The original distance matrix times that scale is a principal submatrix of the
lift's distance matrix, so interlacing carries inertia facts about unweighted
unicyclic graphs back to the weighted graph.

The scale is taken over *all* edge weights (not only the cycle sum's
denominator): that is what makes the lifted graph genuinely unweighted. With
only the cycle sum's denominator, the 4-cycle with weights 1/2, 1, 1/2, 1
(sum 3, would be "odd") has inertia (1, 1, 2), not (1, 0, 3).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import GraphError, LiftTooLargeError
from .graph import Edge, Kind, WeightedGraph, classify_structure, require_admissible
from .inertia import Inertia

MAX_LIFT_VERTICES = 10_000


class Parity(str, enum.Enum):
    ODD = "Odd"
    EVEN = "Even"


@dataclass(frozen=True)
class CycleParity:
    """``b`` clears every weight denominator and ``c`` is the gcd of the cleared weights.

    ``a`` is the cleared cycle sum, so the lifted cycle has length ``a / c``,
    which is ``2k + 1`` (odd) or ``2k`` (even). With integer weights ``b = 1``
    and ``c`` is the plain gcd of the weights.
    """

    parity: Parity
    a: int
    b: int
    c: int
    k: int
    cycle_sum: Fraction

    @property
    def scale(self) -> Fraction:
        return Fraction(self.b, self.c)

    @property
    def lifted_cycle_length(self) -> int:
        return self.a // self.c

    def to_json(self) -> dict:
        return {
            "parity": self.parity.value,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "k": self.k,
            "cycle_sum": str(self.cycle_sum),
            "lifted_cycle_length": self.lifted_cycle_length,
        }


def integer_scale(g: WeightedGraph) -> tuple[int, int]:
    """``(b, c)``: lcm of weight denominators, and gcd of the weights times ``b``."""
    ws = g.weights()
    b = lcm(*(w.denominator for w in ws)) if ws else 1
    c = gcd(*(int(w * b) for w in ws)) if ws else 1
    return b, c


def _cycle_weights(g: WeightedGraph, cycle: tuple[int, ...]) -> list[Fraction]:
    return [g.weight(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def classify_cycle_parity(g: WeightedGraph) -> CycleParity:
    sc = classify_structure(g)
    if sc.kind is not Kind.UNICYCLIC:
        raise GraphError(f"cycle parity needs a unicyclic graph, got {sc.kind.value}")
    total = sum(_cycle_weights(g, sc.cycle_vertices), Fraction(0))
    b, c = integer_scale(g)
    a = int(total * b)
    length = a // c
    if length % 2:
        return CycleParity(Parity.ODD, a, b, c, (length - 1) // 2, total)
    return CycleParity(Parity.EVEN, a, b, c, length // 2, total)


def lift_size(g: WeightedGraph) -> int:
    b, c = integer_scale(g)
    s = Fraction(b, c)
    return g.n + sum(int(e.w * s) - 1 for e in g.edges)


def unweighted_lift(g: WeightedGraph, max_vertices: int = MAX_LIFT_VERTICES) -> tuple[WeightedGraph, Fraction]:
    """Scale to coprime integer weights and subdivide into unit edges.

    Original vertices keep their labels ``1..n``; subdivision vertices follow
    in edge order. Returns the lifted graph and the applied scale.
    """
    require_admissible(g)
    b, c = integer_scale(g)
    scale = Fraction(b, c)
    size = lift_size(g)
    if size > max_vertices:
        raise LiftTooLargeError(f"lift would have {size} vertices (limit {max_vertices})")
    edges = []
    nxt = g.n
    for u, v, w in g.edges:
        units = int(w * scale)
        prev = u
        for _ in range(units - 1):
            nxt += 1
            edges.append(Edge(prev, nxt, Fraction(1)))
            prev = nxt
        edges.append(Edge(prev, v, Fraction(1)))
    return WeightedGraph(nxt, tuple(edges)), scale


class PredictionKind(str, enum.Enum):
    EXACT = "Exact"
    BOUNDED = "Bounded"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class InertiaPrediction:
    kind: PredictionKind
    theorem: str
    exact: Inertia | None = None
    n_plus: int | None = None
    n_zero_max: int | None = None

    def admits(self, inertia: Inertia) -> bool:
        """Whether an observed inertia is consistent with this prediction."""
        if self.kind is PredictionKind.EXACT:
            return inertia == self.exact
        if self.kind is PredictionKind.BOUNDED:
            return inertia.plus == self.n_plus and inertia.zero <= self.n_zero_max
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "inertia": self.exact.to_json() if self.exact else None,
            "n_zero_max": self.n_zero_max,
            "theorem": self.theorem,
        }

    def __str__(self):
        if self.kind is PredictionKind.EXACT:
            return f"Exact {self.exact} [{self.theorem}]"
        if self.kind is PredictionKind.BOUNDED:
            return f"Bounded n+ = {self.n_plus}, n0 <= {self.n_zero_max} [{self.theorem}]"
        return f"Unknown [{self.theorem}]"


def predict_inertia(g: WeightedGraph, max_lift: int = MAX_LIFT_VERTICES) -> InertiaPrediction:
    """Apply the strongest known result for the graph's family."""
    n = g.n
    strong = Inertia(1, 0, n - 1)
    sc = classify_structure(g)
    if sc.kind is Kind.TREE:
        return InertiaPrediction(PredictionKind.EXACT, "weighted-tree", strong)
    if sc.kind is not Kind.UNICYCLIC:
        return InertiaPrediction(PredictionKind.UNKNOWN, "no result for graphs with more than one cycle")
    if sc.cycle_length == 3:
        return InertiaPrediction(PredictionKind.EXACT, "weighted-triangle-unicyclic", strong)
    m = sc.pendant_count
    if all(w == 1 for w in g.weights()):
        g_len = sc.cycle_length
        if g_len % 2:
            k = (g_len - 1) // 2
            return InertiaPrediction(
                PredictionKind.EXACT, "unweighted-unicyclic-odd", Inertia(1, 0, 2 * k + m)
            )
        k = g_len // 2
        return InertiaPrediction(
            PredictionKind.EXACT, "unweighted-unicyclic-even", Inertia(1, k - 1, k + m)
        )
    size = lift_size(g)
    if size > max_lift:
        return InertiaPrediction(
            PredictionKind.UNKNOWN, f"lift has {size} vertices, above the limit of {max_lift}"
        )
    cp = classify_cycle_parity(g)
    if cp.parity is Parity.ODD:
        return InertiaPrediction(PredictionKind.EXACT, "rational-unicyclic-odd-sum", strong)
    return InertiaPrediction(
        PredictionKind.BOUNDED, "rational-unicyclic-even-sum", n_plus=1, n_zero_max=cp.k - 1
    )
