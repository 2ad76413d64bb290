"""The polytope of cycle edge-length vectors, computed exactly.

Collect the edge-length vector of every Hamiltonian cycle on [n] and take the
convex hull: linear optimization over this polytope solves the circulant
routing problem, so its vertex count measures how hard brute force is.  The
counts swing with the factorization of n rather than growing monotonically:
a prime n gives a scaled simplex with floor(n/2) vertices, n = p**2 gives
(p**3 - p)/4, while powers of two have superpolynomially many.  Everything
below runs in exact rational arithmetic: vertices are certified by linear
programming, facets by double description on the polar.
"""

from elpoly import (
    InstanceParams,
    PointSet,
    certify_unique_optimum,
    certify_vertex,
    cycle_count,
    encoding_to_costs,
    enumerate_cycle_vectors,
    enumerate_facets,
    enumerate_vertices,
    extend_to_cycle,
    predicted_vertex_count,
)

print(f"  {'n':>3} {'cycles':>9} {'vectors':>8} {'vertices':>9} {'facets':>7}  prediction")
for n in range(6, 13):
    vset = enumerate_cycle_vectors(n)
    ps = PointSet.of(vset.vectors)
    vsum = enumerate_vertices(ps)
    fsum = enumerate_facets(ps)
    pred = predicted_vertex_count(InstanceParams.for_n(n))
    label = {"exact": f"= {pred.value}", "lower_bound": f">= {pred.value}"}.get(pred.kind, "-")
    print(
        f"  {n:>3} {cycle_count(n):>9} {len(vset):>8} "
        f"{vsum.vertex_count:>9} {fsum.facet_count:>7}  {label}"
    )
print()

# certify one specific vertex at n=8: the cycle closing the greedy path of
# the encoding (x, 2, 1) beats every other cycle under its witness costs
params = InstanceParams.for_n(8)
vset = enumerate_cycle_vectors(8)
ps = PointSet.of(vset.vectors)
enc = ("x", 2, 1)
vec = extend_to_cycle(enc, params).t
costs = encoding_to_costs(enc, params).costs
print(f"extension of {enc} is {vec}")
print("  extreme point of the hull:", certify_vertex(ps, vec))
print(f"  unique optimum under costs {costs}:", certify_unique_optimum(ps, costs, vec))

# vertices of the n=8 hull, exactly as certified
print()
print("all vertices at n=8:")
for v in enumerate_vertices(ps).vertices:
    print(" ", v)
