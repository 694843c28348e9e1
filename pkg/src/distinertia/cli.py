"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 a theorem violation was
found (the output then includes a reproducible counterexample).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .congruence import reduce_graph
from .distance import distance_matrix
from .errors import GraphError, GraphFormatError, LiftTooLargeError, ReductionError
from .exact import Matrix, format_rational
from .fuzz import FAMILIES, DEFAULT_POOL, FamilyUnsatisfiable, FuzzConfig, run_fuzz
from .graph import Kind, WeightedGraph, classify_structure, parse_graph, require_admissible, serialize_graph, subdivide_edge
from .inertia import exact_inertia, float_eigenvalues, float_inertia, relative_threshold
from .theorems import classify_cycle_parity, predict_inertia

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


def _load(path: str) -> WeightedGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    g = parse_graph(text)
    require_admissible(g)
    return g


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def format_matrix(m: Matrix) -> str:
    cells = [[format_rational(x) for x in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def cmd_inertia(args, out) -> int:
    g = _load(args.file)
    d = distance_matrix(g)
    exact = exact_inertia(d.entries)
    eig = float_eigenvalues(d.entries)
    flt = float_inertia(eig, relative_threshold(d.entries))
    pred = predict_inertia(g)
    ok = pred.admits(exact)
    if args.format == "json":
        out.write(_dump({
            "n": g.n,
            "exact": exact.to_json(),
            "float": flt.to_json(),
            "eigenvalues": [float(f"{x:.12g}") for x in eig.eigenvalues],
            "predicted": pred.to_json(),
            "consistent": ok,
        }) + "\n")
    else:
        out.write(f"exact     {exact}\n")
        out.write(f"float     {flt}\n")
        out.write("eigen     " + " ".join(f"{x:.6g}" for x in eig.eigenvalues) + "\n")
        out.write(f"predicted {pred}\n")
        if not ok:
            out.write("THEOREM VIOLATION\n" + serialize_graph(g))
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_reduce(args, out) -> int:
    g = _load(args.file)
    d = distance_matrix(g)
    nf, trace = reduce_graph(g, d, args.root)
    if args.format == "json":
        out.write(_dump(trace.to_json()) + "\n")
    else:
        out.write("ordering " + " ".join(map(str, trace.ordering)) + "\n")
        out.write("steps    " + " ".join(f"({s.i},{s.j})" for s in trace.steps) + "\n")
        out.write("border   " + " ".join(format_rational(x) for x in nf.border) + "\n")
        if nf.coupling is not None:
            out.write(f"coupling {format_rational(nf.coupling)}\n")
        out.write(format_matrix(nf.matrix()) + "\n")
    return EXIT_OK


def cmd_predict(args, out) -> int:
    pred = predict_inertia(_load(args.file))
    out.write((_dump(pred.to_json()) if args.format == "json" else str(pred)) + "\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    g = _load(args.file)
    sc = classify_structure(g)
    parity = classify_cycle_parity(g) if sc.kind is Kind.UNICYCLIC else None
    if args.format == "json":
        out.write(_dump({"structure": sc.to_json(), "cycle_parity": parity and parity.to_json()}) + "\n")
        return EXIT_OK
    out.write(f"kind      {sc.kind.value}\n")
    if sc.kind is Kind.UNICYCLIC:
        out.write("cycle     " + " ".join(map(str, sc.cycle_vertices)) + "\n")
        out.write(f"length    {sc.cycle_length}\n")
        out.write(f"pendants  {sc.pendant_count}\n")
        out.write(
            f"parity    {parity.parity.value} (sum {format_rational(parity.cycle_sum)}, "
            f"lifted length {parity.lifted_cycle_length}, k = {parity.k})\n"
        )
    return EXIT_OK


def _pair(text: str, conv):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated values, got {text!r}")
    try:
        return tuple(conv(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_subdivide(args, out) -> int:
    g = _load(args.file)
    w1, w2 = args.split
    out.write(serialize_graph(subdivide_edge(g, args.edge, w1, w2)))
    return EXIT_OK


def _n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <lo>:<hi>, got {text!r}") from None
    return lo, hi


def _exact_weight(text: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"weights must be exact (<int> or <int>/<int>), got {text!r}")
    return Fraction(text)


def cmd_fuzz(args, out) -> int:
    n_range = args.n or ((2, 12) if args.family == "tree" else (3, 12))
    pool = tuple(args.pool) if args.pool else DEFAULT_POOL
    cfg = FuzzConfig(args.family, n_range, args.trials, args.seed, pool)
    report = run_fuzz(cfg)
    if args.format == "json":
        out.write(_dump(report.to_json()) + "\n")
    else:
        s = report.summary()
        out.write(f"{cfg.family}: {s['passed']}/{s['trials']} pass, max float deviation {s['max_float_deviation']}\n")
        if s["n_zero_histogram"] is not None:
            out.write(f"n0 histogram (bounded cases): {s['n_zero_histogram']}\n")
        for r in report.failures:
            out.write(f"\nCOUNTEREXAMPLE trial {r.trial} seed {cfg.seed}\n{r.graph_text}")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distinertia", description="Inertia of weighted graph distance matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = with_format(sub.add_parser("inertia", help="exact, float and predicted inertia"))
    p.add_argument("file")
    p.set_defaults(func=cmd_inertia)

    p = with_format(sub.add_parser("reduce", help="arrowhead normal form and congruence trace"))
    p.add_argument("file")
    p.add_argument("--root", type=int, default=None)
    p.set_defaults(func=cmd_reduce)

    p = with_format(sub.add_parser("predict", help="theorem-based inertia prediction"))
    p.add_argument("file")
    p.set_defaults(func=cmd_predict)

    p = with_format(sub.add_parser("classify", help="structure and cycle parity"))
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subdivide", help="subdivide one edge and print the new graph file")
    p.add_argument("file")
    p.add_argument("--edge", required=True, type=lambda s: _pair(s, int))
    p.add_argument("--split", required=True, type=lambda s: _pair(s, _exact_weight))
    p.set_defaults(func=cmd_subdivide)

    p = with_format(sub.add_parser("fuzz", help="randomized theorem checking"))
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=_n_range, default=None, help="vertex count range lo:hi")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pool", type=lambda s: [_exact_weight(w) for w in s.split(",")], default=None)
    p.set_defaults(func=cmd_fuzz)
    return parser


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (OSError, GraphFormatError, GraphError, ReductionError, LiftTooLargeError,
            FamilyUnsatisfiable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command())
