"""Divisor constraints on path edge-length multisets, with brute-force oracles.

A Hamiltonian path on [n] using t_i edges of length i must satisfy, for every
divisor q of n, sum_{q | i} t_i <= n - q: edges whose length is a multiple of
q stay inside the q residue classes, and q - 1 other edges are needed to
connect them.  The conjecture that these constraints are also sufficient is
checked here against exhaustive search for small n.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Sequence

from .circulant import EdgeLengthVector, InstanceParams, edge_length, mod1
from .errors import ResourceLimitError

DEFAULT_REALIZE_BOUND = 12
DEFAULT_COUNT_BOUND = 10


@dataclass(frozen=True)
class BhrVerdict:
    """Outcome of the divisor-constraint check, plus the search oracle's word."""

    feasible: bool
    violated_divisor: int | None = None
    realizable: bool | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _as_counts(t: Sequence[int] | EdgeLengthVector, params: InstanceParams) -> tuple[int, ...]:
    counts = tuple(t.t) if isinstance(t, EdgeLengthVector) else tuple(int(x) for x in t)
    if len(counts) != params.d:
        raise ValueError(f"vector {counts} has {len(counts)} entries, expected d={params.d}")
    if any(x < 0 for x in counts):
        raise ValueError(f"negative edge count in {counts}")
    if sum(counts) != params.n - 1:
        raise ValueError(f"path vector must sum to n-1={params.n - 1}, got {sum(counts)}")
    return counts


def check_bhr(t: Sequence[int] | EdgeLengthVector, params: InstanceParams) -> BhrVerdict:
    """Check every divisor constraint; report the smallest violated divisor.

    Divisors q with d < q < n are vacuous (no length is a multiple of q) and
    q = n bounds an empty sum by 0, so only divisors 1 < q <= d matter.
    """
    counts = _as_counts(t, params)
    n, d = params.n, params.d
    for q in range(2, d + 1):
        if n % q != 0:
            continue
        if sum(counts[i - 1] for i in range(q, d + 1, q)) > n - q:
            return BhrVerdict(feasible=False, violated_divisor=q)
    return BhrVerdict(feasible=True)


def realizable_path(
    t: Sequence[int] | EdgeLengthVector,
    params: InstanceParams,
    bound: int = DEFAULT_REALIZE_BOUND,
) -> bool:
    """Decide by backtracking whether some Hamiltonian path realizes t exactly.

    Rotation invariance lets the search start at vertex 1; the reflection
    v -> 2 - v fixes vertex 1, so the second vertex w is canonicalized to
    w <= n + 2 - w.  Candidate moves are tried in ascending length order.
    """
    if params.n > bound:
        raise ResourceLimitError(f"n={params.n} exceeds the search bound {bound}")
    counts = list(_as_counts(t, params))
    n = params.n
    visited = [False] * (n + 1)
    visited[1] = True

    def moves(cur: int, first: bool) -> list[tuple[int, int]]:
        out = []
        for length in range(1, params.d + 1):
            if counts[length - 1] == 0:
                continue
            for nxt in {mod1(cur + length, n), mod1(cur - length, n)}:
                if visited[nxt]:
                    continue
                if first and nxt > n + 2 - nxt:
                    continue
                out.append((length, nxt))
        return sorted(out)

    def extend(cur: int, placed: int) -> bool:
        if placed == n:
            return True
        for length, nxt in moves(cur, first=placed == 1):
            counts[length - 1] -= 1
            visited[nxt] = True
            if extend(nxt, placed + 1):
                return True
            visited[nxt] = False
            counts[length - 1] += 1
        return False

    return extend(1, 1)


def path_multisets(
    params: InstanceParams, bound: int = DEFAULT_COUNT_BOUND
) -> list[tuple[int, ...]]:
    """Sorted list of all edge-length vectors realized by Hamiltonian paths.

    Exhausts all paths starting at vertex 1 (every vector is realized by one,
    by rotation), halved by the reflection canonicalization on the second
    vertex.
    """
    if params.n > bound:
        raise ResourceLimitError(f"n={params.n} exceeds the enumeration bound {bound}")
    n, d = params.n, params.d
    seen: set[tuple[int, ...]] = set()
    length = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                length[a, b] = edge_length(a, b, n)
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] > n + 2 - rest[0]:
            continue
        t = [0] * d
        prev = 1
        for v in rest:
            t[length[prev, v] - 1] += 1
            prev = v
        seen.add(tuple(t))
    return sorted(seen)


def count_realizable_multisets(
    params: InstanceParams, bound: int = DEFAULT_COUNT_BOUND
) -> int:
    """Number of distinct edge-length vectors over all Hamiltonian paths on [n]."""
    return len(path_multisets(params, bound=bound))
