"""Circulant instance model: edge lengths, stripe classes, and circulant graphs.

Vertices are 1-indexed 1..n; modular arithmetic on vertices always maps back
into {1, ..., n}.  The length of an edge {i, j} is min(|i-j|, n-|i-j|), so the
longest possible length is d = floor(n/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidEdgeError, UnsupportedModulusError

ExactScalar = Union[int, Fraction]


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def mod1(v: int, n: int) -> int:
    """Reduce v modulo n into the residue system {1, ..., n}."""
    return (v - 1) % n + 1


@dataclass(frozen=True)
class InstanceParams:
    """Size parameters of an instance on n vertices.

    d is the maximum edge length floor(n/2); k is set to log2(n) when n is a
    power of two (the only case where stripe classes and encodings exist).
    """

    n: int
    d: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need at least 3 vertices, got n={self.n}")
        if self.d != self.n // 2:
            raise ValueError(f"d must be floor(n/2)={self.n // 2}, got {self.d}")
        if self.k is not None:
            if self.k < 2 or 2**self.k != self.n:
                raise ValueError(f"k={self.k} inconsistent with n={self.n}")
        elif is_power_of_two(self.n):
            raise ValueError(f"n={self.n} is a power of two; k must be set")

    @classmethod
    def for_n(cls, n: int) -> "InstanceParams":
        if not isinstance(n, int):
            raise TypeError(f"n must be an integer, got {type(n).__name__}")
        k = n.bit_length() - 1 if is_power_of_two(n) else None
        return cls(n=n, d=n // 2, k=k)


def _as_exact(value: ExactScalar) -> ExactScalar:
    # floats are rejected: unique-optimum certificates need exact arithmetic
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"costs must be int or Fraction, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class CirculantCosts:
    """Exact per-length edge costs (c_1, ..., c_d)."""

    costs: tuple[ExactScalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "costs", tuple(_as_exact(c) for c in self.costs))
        if not self.costs:
            raise ValueError("cost vector must be nonempty")

    @property
    def d(self) -> int:
        return len(self.costs)

    def cost(self, length: int) -> ExactScalar:
        return self.costs[length - 1]

    @classmethod
    def parse(cls, items: Iterable[str | int]) -> "CirculantCosts":
        """Parse cost entries from strings like '3' or '5/2' (exact only)."""
        return cls(tuple(Fraction(x) if not isinstance(x, int) else x for x in items))


@dataclass(frozen=True)
class EdgeLengthVector:
    """Counts (t_1, ..., t_d) of edges of each length in a path or cycle.

    A path on n vertices has sum(t) = n-1, a cycle has sum(t) = n; when n is
    even, at most n/2 diameter edges exist, so t_d <= n/2.
    """

    t: tuple[int, ...]
    kind: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if self.kind not in ("path", "cycle"):
            raise ValueError(f"kind must be 'path' or 'cycle', got {self.kind!r}")
        if any(x < 0 for x in self.t):
            raise ValueError(f"negative edge count in {self.t}")
        n = self.n
        if len(self.t) != n // 2:
            raise ValueError(f"vector {self.t} has {len(self.t)} entries, expected d={n // 2}")
        if n % 2 == 0 and self.t[-1] > n // 2:
            raise ValueError(f"t_d={self.t[-1]} exceeds the n/2={n // 2} available diameter edges")

    @property
    def n(self) -> int:
        return sum(self.t) + (1 if self.kind == "path" else 0)


@dataclass(frozen=True)
class StripePartition:
    """The classes S_1, ..., S_k with S_i = {j in [d]: gcd(n, j) = 2**(k-i)}."""

    n: int
    classes: tuple[frozenset[int], ...]

    def class_of(self, length: int) -> int:
        """1-indexed class containing the given length."""
        for i, cls in enumerate(self.classes, 1):
            if length in cls:
                return i
        raise ValueError(f"length {length} not in any stripe class of n={self.n}")


@dataclass(frozen=True)
class CirculantGraph:
    """The graph on [n] containing exactly the edges whose lengths lie in S."""

    n: int
    lengths: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", frozenset(self.lengths))
        d = self.n // 2
        bad = [j for j in self.lengths if not 1 <= j <= d]
        if bad:
            raise ValueError(f"lengths {bad} outside 1..{d} for n={self.n}")


def edge_length(i: int, j: int, n: int) -> int:
    """Length of the edge {i, j} on n cyclically arranged vertices."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidEdgeError(f"vertices {i}, {j} not in 1..{n}")
    if i == j:
        raise InvalidEdgeError(f"no edge from vertex {i} to itself")
    diff = abs(i - j)
    return min(diff, n - diff)


def stripe_partition(params: InstanceParams) -> StripePartition:
    """Partition the lengths [d] by their gcd with n = 2**k."""
    if params.k is None:
        raise UnsupportedModulusError(f"stripe classes need n = 2**k, got n={params.n}")
    n, d, k = params.n, params.d, params.k
    classes = tuple(
        frozenset(j for j in range(1, d + 1) if math.gcd(n, j) == 2 ** (k - i))
        for i in range(1, k + 1)
    )
    return StripePartition(n=n, classes=classes)


def component_count(g: CirculantGraph) -> int:
    """Number of connected components of C<S>: gcd(n, S)."""
    if not g.lengths:
        raise ValueError("component count needs a nonempty length set")
    return math.gcd(g.n, *g.lengths)


def is_hamiltonian_lengthset(g: CirculantGraph) -> bool:
    """True iff C<S> is connected as a single cycle-spanning structure (gcd = 1)."""
    return component_count(g) == 1


def path_edge_vector(order: Sequence[int], n: int) -> EdgeLengthVector:
    """Edge-length vector of a vertex sequence traversed as an open path."""
    return _edge_vector(order, n, close=False)


def cycle_edge_vector(order: Sequence[int], n: int) -> EdgeLengthVector:
    """Edge-length vector of a vertex sequence traversed as a closed cycle."""
    return _edge_vector(order, n, close=True)


def _edge_vector(order: Sequence[int], n: int, close: bool) -> EdgeLengthVector:
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order must visit 1..{n} exactly once")
    t = [0] * (n // 2)
    for a, b in zip(order, order[1:]):
        t[edge_length(a, b, n) - 1] += 1
    if close:
        t[edge_length(order[-1], order[0], n) - 1] += 1
    return EdgeLengthVector(tuple(t), "cycle" if close else "path")
