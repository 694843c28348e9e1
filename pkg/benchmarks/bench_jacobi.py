"""Time the cyclic Jacobi eigensolver with the numba kernels against the pure-numpy ones.

    python3 benchmarks/bench_jacobi.py --sizes 10 40 120 --repeat 3

Inputs are distance matrices of seeded random weighted trees, the same kind of
matrix the fuzz harness feeds the solver. The first numba call is made before
timing so compilation is excluded.
"""
import argparse
import time

import numpy as np

from distinertia.distance import distance_matrix
from distinertia.fuzz import FuzzConfig, random_graph
from distinertia.inertia import float_eigenvalues


def tree_matrix(n, seed):
    g = random_graph(FuzzConfig("tree", (n, n), 1, seed), 0)
    return distance_matrix(g).as_float()


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 25, 50, 100, 150])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    float_eigenvalues(tree_matrix(4, args.seed), backend="numba")  # compile

    print(f"{'n':>5} {'numba s':>10} {'numpy s':>10} {'speedup':>8} {'max |dlambda|':>14}")
    for n in args.sizes:
        d = tree_matrix(n, args.seed)
        fast = float_eigenvalues(d, backend="numba")
        slow = float_eigenvalues(d, backend="numpy")
        gap = float(np.max(np.abs(np.subtract(fast.eigenvalues, slow.eigenvalues))))
        t_fast = best_of(lambda: float_eigenvalues(d, backend="numba"), args.repeat)
        t_slow = best_of(lambda: float_eigenvalues(d, backend="numpy"), args.repeat)
        print(f"{n:>5} {t_fast:>10.4f} {t_slow:>10.4f} {t_slow / t_fast:>7.1f}x {gap:>14.2e}")


if __name__ == "__main__":
    main()
