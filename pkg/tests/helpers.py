"""Independent oracles: slower second routes used to cross-check the library."""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

from elpoly import edge_length
from elpoly.circulant import mod1


def bfs_component_count(n: int, lengths) -> int:
    """Components of the graph on [n] with the given edge lengths, by BFS."""
    seen = [False] * (n + 1)
    comps = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        comps += 1
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            for length in lengths:
                for w in (mod1(v + length, n), mod1(v - length, n)):
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
    return comps


def backtracking_cycle_vectors(n: int):
    """Second enumeration strategy: adjacency-driven DFS over cycles.

    Fixes vertex 1 first and counts a completed cycle only when the second
    vertex is smaller than the last, so the counter matches (n-1)!/2.
    """
    d = n // 2
    visited = [False] * (n + 1)
    visited[1] = True
    order = [1]
    counts = [0] * d
    seen: set[tuple[int, ...]] = set()
    total = 0

    def rec(cur: int) -> None:
        nonlocal total
        if len(order) == n:
            if order[1] < order[-1]:
                closing = edge_length(cur, 1, n)
                counts[closing - 1] += 1
                seen.add(tuple(counts))
                total += 1
                counts[closing - 1] -= 1
            return
        for nxt in range(2, n + 1):
            if visited[nxt]:
                continue
            length = edge_length(cur, nxt, n)
            visited[nxt] = True
            order.append(nxt)
            counts[length - 1] += 1
            rec(nxt)
            counts[length - 1] -= 1
            order.pop()
            visited[nxt] = False

    rec(1)
    return total, sorted(seen)


def path_vectors_descending(n: int) -> list[tuple[int, ...]]:
    """All path edge-length vectors, by iterating successors in descending order.

    Every realizable vector appears among paths starting at vertex 1 (rotate
    the path); no reflection reduction is applied, so the iteration order and
    coverage differ from the library's enumerator.
    """
    d = n // 2
    seen: set[tuple[int, ...]] = set()
    for perm in itertools.permutations(range(n, 1, -1)):
        t = [0] * d
        prev = 1
        for v in perm:
            t[edge_length(prev, v, n) - 1] += 1
            prev = v
        seen.add(tuple(t))
    return sorted(seen)


def mst_cost(n: int, costs) -> object:
    """Minimum spanning tree cost of K_n under circulant costs (Prim).

    A Hamiltonian path is a spanning tree, and on circulant costs the optimum
    path meets the spanning-tree lower bound, so this is an independent oracle
    for the minimum path cost.
    """
    best = {v: None for v in range(2, n + 1)}
    in_tree = {1}
    for v in range(2, n + 1):
        best[v] = costs[edge_length(1, v, n) - 1]
    total = 0
    while len(in_tree) < n:
        v = min(best, key=lambda u: (best[u], u))
        total += best[v]
        in_tree.add(v)
        del best[v]
        for u in best:
            c = costs[edge_length(v, u, n) - 1]
            if c < best[u]:
                best[u] = c
    return total


def solve_exact(rows, rhs):
    """Any exact solution of a (possibly non-square) rational system, or None."""
    m = len(rows)
    k = len(rows[0]) if m else 0
    work = [[Fraction(x) for x in row] + [Fraction(rhs[r])] for r, row in enumerate(rows)]
    pivots = []
    rank = 0
    for col in range(k):
        piv = next((r for r in range(rank, m) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = Fraction(1) / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for r in range(m):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if work[r][k] != 0:
            return None
    x = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        x[col] = work[r][k]
    return x


def naive_is_extreme(points, x) -> bool:
    """Caratheodory oracle: x is extreme iff no affinely independent subset of
    at most dim+1 other points contains x in its convex hull.  Independent
    subsets have unique barycentric coordinates, so the test is exact."""
    dim = len(x)
    others = [p for p in points if p != x]
    for size in range(1, dim + 2):
        for subset in itertools.combinations(others, size):
            if not _affinely_independent(subset):
                continue
            rows = [[Fraction(p[c]) for p in subset] for c in range(dim)]
            rows.append([Fraction(1)] * size)
            lam = solve_exact(rows, list(x) + [1])
            if lam is not None and all(v >= 0 for v in lam):
                return False
    return True


def _affinely_independent(subset) -> bool:
    if len(subset) == 1:
        return True
    base = subset[0]
    rows = [[Fraction(a - b) for a, b in zip(p, base)] for p in subset[1:]]
    rank = 0
    cols = len(rows[0])
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(rows)
