"""Cost permutations, g-sequences, and greedy minimum-cost Hamiltonian paths.

A cost permutation phi orders the d edge lengths by nondecreasing cost.  The
g-sequence g_0 = n, g_i = gcd(phi(i), g_{i-1}) measures how the graph on the i
cheapest lengths becomes connected: it has g_i components.  The greedy optimum
path uses g_{i-1} - g_i edges of length phi(i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circulant import CirculantCosts, EdgeLengthVector, ExactScalar, InstanceParams


@dataclass(frozen=True)
class CostPermutation:
    """A bijection [d] -> [d]; phi(i) is the i-th cheapest edge length."""

    phi: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        if sorted(self.phi) != list(range(1, len(self.phi) + 1)):
            raise ValueError(f"{self.phi} is not a permutation of 1..{len(self.phi)}")

    @property
    def d(self) -> int:
        return len(self.phi)

    def __call__(self, i: int) -> int:
        return self.phi[i - 1]

    @classmethod
    def from_costs(cls, costs: CirculantCosts) -> "CostPermutation":
        """Sort lengths by cost; ties broken by smaller length first."""
        order = sorted(range(1, costs.d + 1), key=lambda j: (costs.cost(j), j))
        return cls(tuple(order))

    @classmethod
    def from_prefix(cls, prefix: tuple[int, ...], d: int) -> "CostPermutation":
        """Complete a distinct-length prefix with the unused lengths ascending."""
        if len(set(prefix)) != len(prefix) or any(not 1 <= j <= d for j in prefix):
            raise ValueError(f"{prefix} is not a prefix of a permutation of 1..{d}")
        rest = [j for j in range(1, d + 1) if j not in set(prefix)]
        return cls(tuple(prefix) + tuple(rest))


@dataclass(frozen=True)
class GSequence:
    """The gcd cascade (g_0, ..., g_d) and ell = min{i : g_i = 1}."""

    g: tuple[int, ...]
    ell: int

    def drop(self, i: int) -> int:
        """g_{i-1} - g_i, the number of length-phi(i) edges a greedy path uses."""
        return self.g[i - 1] - self.g[i]


def g_sequence(phi: CostPermutation, params: InstanceParams) -> GSequence:
    """Compute g_0 = n, g_i = gcd(phi(i), g_{i-1}).

    Equivalently g_i = gcd(n, phi(1), ..., phi(i)); since 1 <= d the cascade
    always reaches 1, so ell is well defined.
    """
    if phi.d != params.d:
        raise ValueError(f"permutation of size {phi.d} does not match d={params.d}")
    g = [params.n]
    for length in phi.phi:
        g.append(math.gcd(length, g[-1]))
    ell = next(i for i in range(1, params.d + 1) if g[i] == 1)
    return GSequence(g=tuple(g), ell=ell)


def blg_edge_multiset(phi: CostPermutation, params: InstanceParams) -> EdgeLengthVector:
    """Edge-length vector of the greedy minimum-cost Hamiltonian path for phi.

    The path uses g_{i-1} - g_i edges of length phi(i); the counts telescope
    to n - 1.
    """
    gs = g_sequence(phi, params)
    t = [0] * params.d
    for i in range(1, params.d + 1):
        t[phi(i) - 1] = gs.drop(i)
    return EdgeLengthVector(tuple(t), "path")


def min_path_cost(costs: CirculantCosts, params: InstanceParams) -> ExactScalar:
    """Exact cost of a minimum-cost Hamiltonian path under circulant costs."""
    if costs.d != params.d:
        raise ValueError(f"cost vector of size {costs.d} does not match d={params.d}")
    phi = CostPermutation.from_costs(costs)
    gs = g_sequence(phi, params)
    total: ExactScalar = 0
    for i in range(1, gs.ell + 1):
        total += gs.drop(i) * costs.cost(phi(i))
    return total
