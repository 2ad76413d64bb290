"""Minimum-cost Hamiltonian paths when every length has one cost.

With circulant costs (all edges of length i cost c_i), a greedy strategy is
optimal: use as many edges of the cheapest length as possible, then of the
next cheapest, and so on.  How greedy each step can be is governed by a gcd
cascade: after the i cheapest lengths, the graph splits into
g_i = gcd(n, phi(1), ..., phi(i)) components, so the path can hold at most
n - g_i edges from those lengths.  The optimum uses exactly g_{i-1} - g_i
edges of the i-th cheapest length, and an explicit path achieving it comes
from copying, translating, and stitching a seed path.
"""

from elpoly import (
    CirculantCosts,
    CostPermutation,
    InstanceParams,
    blg_edge_multiset,
    build_blg_path,
    g_sequence,
    min_path_cost,
)

params = InstanceParams.for_n(8)
costs = CirculantCosts((3, 2, 4, 1))
phi = CostPermutation.from_costs(costs)
gs = g_sequence(phi, params)

print("n = 8, costs c =", costs.costs)
print("cheapness order phi =", phi.phi)
print("gcd cascade g =", gs.g, " (first 1 at position", gs.ell, ")")
print("edges per length:", blg_edge_multiset(phi, params).t)
print("optimal path cost:", min_path_cost(costs, params))
print()

# the explicit construction, on the 32-vertex example with phi = (8, 10, 7, ...)
params = InstanceParams.for_n(32)
phi = CostPermutation.from_prefix((8, 10, 7), params.d)
gs = g_sequence(phi, params)
path = build_blg_path(phi, params)
print("n = 32, phi starts (8, 10, 7):  g =", gs.g[: gs.ell + 1])
print("stage 1 walks length-8 edges over {v : v = 1 mod 8}:", path.order[:4])
print("full path:")
print(" ", path.order)
print("edge multiset:", path.edge_vector().t)
assert path.edge_vector().t == blg_edge_multiset(phi, params).t
print()

# the greedy value matches a spanning-tree bound: any Hamiltonian path is a
# spanning tree, and on circulant costs the optimum path costs exactly as
# much as a minimum spanning tree
params = InstanceParams.for_n(12)
costs = CirculantCosts((10, 10, 10, 10, 10, 1))
print("n = 12, cheap diameters:", costs.costs, "-> optimal path cost", min_path_cost(costs, params))
