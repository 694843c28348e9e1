"""Independent brute-force oracles. Nothing here calls into the code under test."""
from fractions import Fraction
from itertools import combinations


def all_simple_path_distances(n, edges):
    """Minimum path weight for every pair by enumerating every simple path (n <= 8)."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v, w in edges:
        adj[u].append((v, Fraction(w)))
        adj[v].append((u, Fraction(w)))
    best = [[None] * (n + 1) for _ in range(n + 1)]

    def walk(start, v, seen, length):
        if best[start][v] is None or length < best[start][v]:
            best[start][v] = length
        for u, w in adj[v]:
            if u not in seen:
                seen.add(u)
                walk(start, u, seen, length + w)
                seen.remove(u)

    for s in range(1, n + 1):
        walk(s, s, {s}, Fraction(0))
    return [[best[i][j] for j in range(1, n + 1)] for i in range(1, n + 1)]


def tree_path_sums(n, edges):
    """Sum of weights along the unique path, found by parent pointers from each source."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v, w in edges:
        adj[u].append((v, Fraction(w)))
        adj[v].append((u, Fraction(w)))
    out = []
    for s in range(1, n + 1):
        dist = {s: Fraction(0)}
        stack = [s]
        while stack:
            v = stack.pop()
            for u, w in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + w
                    stack.append(u)
        out.append([dist[v] for v in range(1, n + 1)])
    return out


def charpoly(m):
    """Coefficients of det(xI - M), leading first, by Faddeev-LeVerrier over Fractions."""
    n = len(m)
    m = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = M (M_{k-1} + c_{k-1} I)
        prev = [[mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        mk = [[sum(m[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(mk[i][i] for i in range(n)) / k)
    return coeffs


def _sign_changes(seq):
    signs = [x > 0 for x in seq if x != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def charpoly_inertia(m):
    """Inertia from the characteristic polynomial by Descartes' rule of signs.

    The polynomial of a symmetric matrix has only real roots, so the sign
    variation counts are exact root counts rather than upper bounds.
    """
    c = charpoly(m)
    n = len(c) - 1
    zero = 0
    while zero < n and c[n - zero] == 0:
        zero += 1
    trimmed = c[: n + 1 - zero]
    plus = _sign_changes(trimmed)
    deg = len(trimmed) - 1
    minus = _sign_changes([x * (-1) ** (deg - i) for i, x in enumerate(trimmed)])
    return plus, zero, minus


def leibniz_det(m):
    """Determinant by permutation expansion (n <= 7)."""
    from itertools import permutations

    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = Fraction(1)
        for i in range(n):
            term *= m[i][perm[i]]
        total += -term if inv % 2 else term
    return total
