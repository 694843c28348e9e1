"""Seeded random graph families and the fuzz harness that checks every theorem on them.

Randomness comes from numpy's PCG64. Trial ``t`` of a run with seed ``s`` uses
the stream ``PCG64(s XOR t)``, so any single trial can be reproduced on its own
and results are identical across platforms.
"""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .congruence import apply_trace, reduce_graph
from .distance import distance_matrix
from .errors import ReductionError, TheoremViolation
from .exact import format_rational
from .graph import Edge, WeightedGraph, relabel, serialize_graph
from .inertia import arrowhead_inertia, exact_inertia, float_eigenvalues, float_inertia, relative_threshold
from .theorems import Parity, PredictionKind, classify_cycle_parity, predict_inertia

FAMILIES = ("tree", "unicyclic3", "unicyclic-odd", "unicyclic-even", "unweighted-unicyclic")
DEFAULT_POOL = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(1, 3), Fraction(5, 2))
MAX_REDRAWS = 1000
_MASK64 = (1 << 64) - 1


class FamilyUnsatisfiable(ValueError):
    pass


@dataclass(frozen=True)
class FuzzConfig:
    family: str
    n_range: tuple[int, int]
    trials: int
    seed: int
    weight_pool: tuple[Fraction, ...] = DEFAULT_POOL

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        lo, hi = self.n_range
        floor = 2 if self.family == "tree" else 3
        if lo < floor or hi < lo:
            raise ValueError(f"n range {lo}:{hi} invalid for {self.family} (minimum {floor})")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if not self.weight_pool or any(w <= 0 for w in self.weight_pool):
            raise ValueError("weight pool must be nonempty and positive")


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64((seed ^ trial_index) & _MASK64))


def _draw_weights(rng, pool, count):
    return [pool[i] for i in rng.integers(0, len(pool), size=count)]


def _attach_pendants(rng, start: int, n: int) -> list[tuple[int, int]]:
    """Grow random pendant trees: vertex ``v`` (0-based, ``v >= start``) attaches to a random earlier vertex."""
    return [(int(rng.integers(0, v)), v) for v in range(start, n)]


def _shuffle_labels(rng, n, pairs, weights) -> WeightedGraph:
    perm = rng.permutation(n) + 1
    g = WeightedGraph(n, tuple(Edge(u + 1, v + 1, w) for (u, v), w in zip(pairs, weights)))
    return relabel(g, [int(x) for x in perm])


def random_graph(cfg: FuzzConfig, trial_index: int) -> WeightedGraph:
    """Deterministic function of ``(cfg, trial_index)``."""
    rng = trial_rng(cfg.seed, trial_index)
    lo, hi = cfg.n_range
    n = int(rng.integers(lo, hi + 1))
    pool = list(cfg.weight_pool)

    if cfg.family == "tree":
        pairs = _attach_pendants(rng, 1, n)
        return _shuffle_labels(rng, n, pairs, _draw_weights(rng, pool, len(pairs)))

    g_len = 3 if cfg.family == "unicyclic3" else int(rng.integers(3, n + 1))
    pairs = [(i, (i + 1) % g_len) for i in range(g_len)] + _attach_pendants(rng, g_len, n)
    if cfg.family == "unweighted-unicyclic":
        return _shuffle_labels(rng, n, pairs, [Fraction(1)] * len(pairs))
    if cfg.family == "unicyclic3":
        return _shuffle_labels(rng, n, pairs, _draw_weights(rng, pool, len(pairs)))

    want = Parity.ODD if cfg.family == "unicyclic-odd" else Parity.EVEN
    for _ in range(MAX_REDRAWS):
        weights = _draw_weights(rng, pool, len(pairs))
        g = WeightedGraph(n, tuple(Edge(u + 1, v + 1, w) for (u, v), w in zip(pairs, weights)))
        if classify_cycle_parity(g).parity is want:
            return _shuffle_labels(rng, n, pairs, weights)
    raise FamilyUnsatisfiable(
        f"no {want.value.lower()} cycle sum found for a {g_len}-cycle after {MAX_REDRAWS} redraws "
        f"from pool {[format_rational(w) for w in pool]}"
    )


def graph_hash(g: WeightedGraph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:16]


@dataclass
class TrialRecord:
    trial: int
    n: int
    graph_hash: str
    predicted: dict
    exact: dict
    float: dict
    predicted_ok: bool
    float_ok: bool
    reduction_ok: bool | None
    deviation: float
    n_zero: int
    bounded: bool
    graph_text: str = field(repr=False, default="")

    @property
    def passed(self) -> bool:
        return self.predicted_ok and self.float_ok and self.reduction_ok is not False

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "n": self.n,
            "graph_hash": self.graph_hash,
            "predicted": self.predicted,
            "exact": self.exact,
            "float": self.float,
            "agree": {
                "prediction": self.predicted_ok,
                "float": self.float_ok,
                "reduction": self.reduction_ok,
            },
            "pass": self.passed,
        }


def run_trial(g: WeightedGraph, trial: int = 0, family: str | None = None) -> TrialRecord:
    d = distance_matrix(g)
    exact = exact_inertia(d.entries)
    pred = predict_inertia(g)
    eig = float_eigenvalues(d.entries)
    flt = float_inertia(eig, relative_threshold(d.entries))
    norm = float(max(sum(abs(x) for x in row) for row in d.entries))
    reduction_ok = None
    if family in ("tree", "unicyclic3"):
        try:
            nf, trace = reduce_graph(g, d)
            reduction_ok = (
                apply_trace(d.entries, trace) == nf.matrix()
                and arrowhead_inertia(nf) == exact
            )
        except (ReductionError, TheoremViolation):
            reduction_ok = False
    return TrialRecord(
        trial=trial,
        n=g.n,
        graph_hash=graph_hash(g),
        predicted=pred.to_json(),
        exact=exact.to_json(),
        float=flt.to_json(),
        predicted_ok=pred.admits(exact),
        float_ok=flt == exact,
        reduction_ok=reduction_ok,
        deviation=eig.residual_bound / norm if norm else 0.0,
        n_zero=exact.zero,
        bounded=pred.kind is PredictionKind.BOUNDED,
        graph_text=serialize_graph(g),
    )


@dataclass
class Report:
    config: FuzzConfig
    records: list[TrialRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.passed]

    def summary(self) -> dict:
        bounded = [r.n_zero for r in self.records if r.bounded]
        hist = Counter(bounded)
        return {
            "trials": len(self.records),
            "passed": sum(r.passed for r in self.records),
            "failed": len(self.failures),
            "max_float_deviation": f"{max((r.deviation for r in self.records), default=0.0):.3e}",
            "n_zero_histogram": {str(k): hist[k] for k in sorted(hist)} if bounded else None,
        }

    def to_json(self) -> dict:
        cfg = self.config
        out = {
            "config": {
                "family": cfg.family,
                "n_range": list(cfg.n_range),
                "trials": cfg.trials,
                "seed": cfg.seed,
                "weight_pool": [format_rational(w) for w in cfg.weight_pool],
            },
            "records": [r.to_json() for r in self.records],
            "summary": self.summary(),
        }
        if not self.passed:
            out["counterexamples"] = [
                {"trial": r.trial, "seed": cfg.seed, "graph": r.graph_text} for r in self.failures
            ]
        return out


def run_fuzz(cfg: FuzzConfig) -> Report:
    records = [run_trial(random_graph(cfg, t), t, cfg.family) for t in range(cfg.trials)]
    records.sort(key=lambda r: r.trial)
    return Report(cfg, records)
